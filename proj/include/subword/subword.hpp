#ifndef SUBWORD_SUBWORD_HPP
#define SUBWORD_SUBWORD_HPP

#include "subword/coxeter.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace subword {

enum class Sign { kPositive, kNegative };

/// Which of the two greedy sweeps builds a greedy facet.
///   kInversionsEarly:     place inversions as soon as possible
///   kNonInversionsLate:   place non-inversions as long as possible
enum class Sweep { kInversionsEarly, kNonInversionsLate };

/// Subword complex K(Q, rho): a word Q of length m and an element rho.
class Instance
{
public:
  Instance(std::shared_ptr<const CoxeterSystem> sys, Word word, Word rho_word);
  /// rho_word is derived as some reduced expression of rho.
  Instance(std::shared_ptr<const CoxeterSystem> sys, Word word, const Element& rho);

  const CoxeterSystem& system() const { return *sys_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return sys_; }

  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  /// Letter at 1-based position pos.
  Generator letter(int pos) const { return word_[pos - 1]; }

  const Element& rho() const { return rho_; }
  const Word& rho_word() const { return rho_word_; }

  /// Whether root r lies in inv(rho^{-1}); false for negative roots.
  bool in_inv_rho_inv(RootIndex r) const
  { return r < static_cast<RootIndex>(inv_rho_inv_.size()) && inv_rho_inv_[r]; }

  bool nonempty() const { return nonempty_; }

private:
  void init();

  std::shared_ptr<const CoxeterSystem> sys_;
  Word word_;
  Word rho_word_;
  Element rho_;
  std::vector<bool> inv_rho_inv_;
  bool nonempty_ = false;
};

/// A facet I with its root function r(k) = sigma_{[k-1] \ I}(alpha_{q_k}).
///
/// Positions are 1-based in the whole public interface.
class Facet
{
public:
  int size() const { return static_cast<int>(members_.size()); }

  bool contains(int pos) const { return members_[pos - 1]; }
  RootIndex root(int pos) const { return roots_[pos - 1]; }

  std::vector<int> positions() const;
  const std::vector<bool>& membership() const { return members_; }
  std::span<const RootIndex> roots() const { return roots_; }

  bool operator==(const Facet&) const = default;

private:
  friend Facet facet_from_positions(const Instance&, std::span<const int>);
  friend int flip_in_place(const Instance&, Facet&, int);

  std::vector<bool> members_;
  std::vector<RootIndex> roots_;
};

/// Multiset of roots r(i) over the flippable positions i of a facet.
using RootConfiguration = std::vector<RootIndex>;

/// Whether word contains a reduced expression of rho (the complex is nonempty).
bool contains(const CoxeterSystem& sys, std::span<const Generator> word, const Element& rho);

/// Greedy facet positions (1-based, ascending) of K(word, rho).
/// Throws EmptyComplex when rho is not a subword.
std::vector<int> greedy_positions(const CoxeterSystem& sys, std::span<const Generator> word,
                                  const Element& rho, Sign sign,
                                  Sweep sweep = Sweep::kInversionsEarly);

/// Builds the root function from scratch in one left-to-right pass.
/// Throws NotAFacet unless the complement is a reduced expression of rho.
Facet facet_from_positions(const Instance& inst, std::span<const int> positions);

Facet positive_greedy(const Instance& inst);
Facet negative_greedy(const Instance& inst);
inline Facet greedy_facet(const Instance& inst, Sign sign)
{ return sign == Sign::kPositive ? positive_greedy(inst) : negative_greedy(inst); }

RootIndex root(const Instance& inst, const Facet& facet, int k);
RootConfiguration root_configuration(const Instance& inst, const Facet& facet);

/// k must lie in the facet.
bool is_flippable(const Instance& inst, const Facet& facet, int k);

/// Flips position i of the facet in place and returns the partner position j.
/// Flipping j afterwards restores the original facet and root function.
int flip_in_place(const Instance& inst, Facet& facet, int i);

/// Value form of flip_in_place: (flipped facet, j).
std::pair<Facet, int> flip(const Instance& inst, const Facet& facet, int i);

/// Greedy indices computed from their definition (slow reference).
///   negative: last x with I ∩ [x] = nu(q_1..q_x, sigma_{[x] \ I})
///   positive: first x with I ∩ [x, m] = pi(q_x..q_m, sigma_{[x, m] \ I}), shifted
int negative_greedy_index(const Instance& inst, const Facet& facet);
int positive_greedy_index(const Instance& inst, const Facet& facet);
inline int greedy_index(const Instance& inst, const Facet& facet, Sign sign)
{
  return sign == Sign::kPositive ? positive_greedy_index(inst, facet)
                                 : negative_greedy_index(inst, facet);
}

/// The instance on the reversed word with rho^{-1}.
Instance reverse_instance(const Instance& inst);

} // namespace subword

#endif
