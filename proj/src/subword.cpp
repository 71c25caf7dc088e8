#include "subword/subword.hpp"

#include "subword/error.hpp"

#include <algorithm>
#include <string>

namespace subword {

Instance::Instance(std::shared_ptr<const CoxeterSystem> sys, Word word, Word rho_word)
: sys_(std::move(sys)), word_(std::move(word)), rho_word_(std::move(rho_word)),
  rho_(Element::from_word(*sys_, rho_word_))
{
  init();
}

Instance::Instance(std::shared_ptr<const CoxeterSystem> sys, Word word, const Element& rho)
: sys_(std::move(sys)), word_(std::move(word)), rho_word_(reduced_word(*sys_, rho)), rho_(rho)
{
  init();
}

void Instance::init()
{
  for (Generator s : word_)
    if (s < 0 || s >= sys_->rank())
      throw Error("letter s" + std::to_string(s + 1) + " outside the generating set");
  // inv(rho^{-1}) = positive roots beta with rho^{-1}(beta) negative
  inv_rho_inv_.assign(sys_->num_positive(), false);
  for (RootIndex r = 0; r < sys_->num_positive(); ++r)
    inv_rho_inv_[r] = !sys_->is_positive(rho_.apply_inverse(r));
  nonempty_ = subword::contains(*sys_, word_, rho_);
}

std::vector<int> Facet::positions() const
{
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (members_[k]) out.push_back(k + 1);
  return out;
}

bool contains(const CoxeterSystem& sys, std::span<const Generator> word, const Element& rho)
{
  if (static_cast<std::size_t>(rho.length()) > word.size()) return false;
  Element w = rho;
  for (std::size_t k = word.size(); k-- > 0 && !w.is_identity();)
    if (w.is_right_descent(word[k])) w.multiply_right(sys, word[k]);
  return w.is_identity();
}

std::vector<int> greedy_positions(const CoxeterSystem& sys, std::span<const Generator> word,
                                  const Element& rho, Sign sign, Sweep sweep)
{
  const int m = static_cast<int>(word.size());
  std::vector<bool> in(m, false);
  Element v = rho;

  if (sign == Sign::kPositive && sweep == Sweep::kInversionsEarly) {
    // right to left, cross as soon as the letter is a right descent
    for (int k = m - 1; k >= 0; --k) {
      if (v.is_right_descent(word[k]))
        v.multiply_right(sys, word[k]);
      else
        in[k] = true;
    }
  } else if (sign == Sign::kNegative && sweep == Sweep::kInversionsEarly) {
    // left to right, cross as soon as the letter is a left descent
    for (int k = 0; k < m; ++k) {
      if (v.is_left_descent(word[k]))
        v.multiply_left(sys, word[k]);
      else
        in[k] = true;
    }
  } else if (sign == Sign::kPositive) {
    // left to right, keep a contact while the rest of the word still suffices
    for (int k = 0; k < m; ++k) {
      if (contains(sys, word.subspan(k + 1), v)) {
        in[k] = true;
      } else {
        if (!v.is_left_descent(word[k])) throw EmptyComplex();
        v.multiply_left(sys, word[k]);
      }
    }
  } else {
    for (int k = m - 1; k >= 0; --k) {
      if (contains(sys, word.first(k), v)) {
        in[k] = true;
      } else {
        if (!v.is_right_descent(word[k])) throw EmptyComplex();
        v.multiply_right(sys, word[k]);
      }
    }
  }
  if (!v.is_identity()) throw EmptyComplex();

  std::vector<int> out;
  for (int k = 0; k < m; ++k)
    if (in[k]) out.push_back(k + 1);
  return out;
}

Facet facet_from_positions(const Instance& inst, std::span<const int> positions)
{
  const auto& sys = inst.system();
  const int m = inst.size();
  Facet f;
  f.members_.assign(m, false);
  for (int p : positions) {
    if (p < 1 || p > m)
      throw NotAFacet("position " + std::to_string(p) + " outside [1, " + std::to_string(m) + "]");
    if (f.members_[p - 1])
      throw NotAFacet("position " + std::to_string(p) + " repeated");
    f.members_[p - 1] = true;
  }
  if (m - static_cast<int>(positions.size()) != inst.rho().length())
    throw NotAFacet("complement has " + std::to_string(m - positions.size()) +
                    " letters but rho has length " + std::to_string(inst.rho().length()));

  // sigma runs over the complement letters seen so far
  f.roots_.resize(m);
  Element sigma = Element::identity(sys);
  for (int k = 0; k < m; ++k) {
    Generator q = inst.word()[k];
    f.roots_[k] = sigma.apply(q);
    if (!f.members_[k]) {
      if (sigma.is_right_descent(q)) throw NotAFacet("complement is not a reduced expression");
      sigma.multiply_right(sys, q);
    }
  }
  if (!(sigma == inst.rho())) throw NotAFacet("complement does not multiply to rho");
  return f;
}

Facet positive_greedy(const Instance& inst)
{
  auto pos = greedy_positions(inst.system(), inst.word(), inst.rho(), Sign::kPositive);
  return facet_from_positions(inst, pos);
}

Facet negative_greedy(const Instance& inst)
{
  auto pos = greedy_positions(inst.system(), inst.word(), inst.rho(), Sign::kNegative);
  return facet_from_positions(inst, pos);
}

RootIndex root(const Instance&, const Facet& facet, int k)
{
  return facet.root(k);
}

RootConfiguration root_configuration(const Instance& inst, const Facet& facet)
{
  RootConfiguration out;
  for (int i = 1; i <= facet.size(); ++i)
    if (facet.contains(i) && is_flippable(inst, facet, i)) out.push_back(facet.root(i));
  return out;
}

bool is_flippable(const Instance& inst, const Facet& facet, int k)
{
  RootIndex r = facet.root(k);
  return !inst.system().is_positive(r) || inst.in_inv_rho_inv(r);
}

int flip_in_place(const Instance& inst, Facet& facet, int i)
{
  const auto& sys = inst.system();
  if (i < 1 || i > facet.size() || !facet.contains(i))
    throw NotFlippable("position " + std::to_string(i) + " is not in the facet");
  if (!is_flippable(inst, facet, i))
    throw NotFlippable("position " + std::to_string(i) + " is not flippable");

  const RootIndex beta = facet.roots_[i - 1];
  const RootIndex target = sys.positive_part(beta);
  // the complement carries each root of inv(rho^{-1}) exactly once
  int j = 0;
  for (int k = 1; k <= facet.size(); ++k)
    if (!facet.members_[k - 1] && facet.roots_[k - 1] == target) {
      j = k;
      break;
    }
  if (j == 0) throw NotFlippable("no partner position for " + std::to_string(i));

  auto refl = sys.reflection_perm(target);
  for (int k = std::min(i, j) + 1; k <= std::max(i, j); ++k)
    facet.roots_[k - 1] = refl[facet.roots_[k - 1]];
  facet.members_[i - 1] = false;
  facet.members_[j - 1] = true;
  return j;
}

std::pair<Facet, int> flip(const Instance& inst, const Facet& facet, int i)
{
  Facet out = facet;
  int j = flip_in_place(inst, out, i);
  return {std::move(out), j};
}

int negative_greedy_index(const Instance& inst, const Facet& facet)
{
  const auto& sys = inst.system();
  const auto word = std::span<const Generator>(inst.word());
  for (int x = inst.size(); x >= 1; --x) {
    Word sigma;
    for (int k = 1; k <= x; ++k)
      if (!facet.contains(k)) sigma.push_back(inst.letter(k));
    auto nu = greedy_positions(sys, word.first(x), Element::from_word(sys, sigma), Sign::kNegative);
    std::vector<int> prefix;
    for (int k = 1; k <= x; ++k)
      if (facet.contains(k)) prefix.push_back(k);
    if (nu == prefix) return x;
  }
  return 0;
}

int positive_greedy_index(const Instance& inst, const Facet& facet)
{
  const auto& sys = inst.system();
  const int m = inst.size();
  const auto word = std::span<const Generator>(inst.word());
  for (int x = 1; x <= m; ++x) {
    Word sigma;
    for (int k = x; k <= m; ++k)
      if (!facet.contains(k)) sigma.push_back(inst.letter(k));
    auto pi = greedy_positions(sys, word.subspan(x - 1), Element::from_word(sys, sigma),
                               Sign::kPositive);
    std::vector<int> suffix;
    for (int k = x; k <= m; ++k)
      if (facet.contains(k)) suffix.push_back(k - x + 1);
    if (pi == suffix) return x;
  }
  return m + 1;
}

Instance reverse_instance(const Instance& inst)
{
  Word q(inst.word().rbegin(), inst.word().rend());
  Word r(inst.rho_word().rbegin(), inst.rho_word().rend());
  return Instance(inst.system_ptr(), std::move(q), std::move(r));
}

} // namespace subword
