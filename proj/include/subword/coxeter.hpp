#ifndef SUBWORD_COXETER_HPP
#define SUBWORD_COXETER_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

/// Exact element a + b*phi of Z[phi], with phi^2 = phi + 1.
///
/// Crystallographic types never produce b != 0; the golden ratio only shows
/// up through bonds labelled 5 (H3, H4, I2(5)).
class QuadInt
{
public:
  constexpr QuadInt() = default;
  constexpr QuadInt(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  constexpr std::int64_t rational() const { return a_; }
  constexpr std::int64_t irrational() const { return b_; }

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator-() const;
  QuadInt operator*(const QuadInt& o) const;

  /// Sign of the real number a + b*phi: -1, 0 or 1.
  int sign() const;

  constexpr bool operator==(const QuadInt&) const = default;
  constexpr auto operator<=>(const QuadInt&) const = default;

  double to_double() const;

private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

using Root = std::vector<QuadInt>;
using RootIndex = std::int32_t;
using Generator = int;

/// Finite sequence of generator indices, 0-based internally.
using Word = std::vector<Generator>;

class CoxeterMatrix
{
public:
  CoxeterMatrix() = default;

  /// Throws InvalidMatrix unless symmetric, unit diagonal, bonds in 2..6.
  CoxeterMatrix(int rank, std::vector<int> entries);

  /// Presets: A_n, B_n, C_n, D_n, E6-8, F4, G2, H3, H4, I2(m) for m <= 6.
  static CoxeterMatrix from_type(std::string_view type);

  /// Text format: first line n, then n lines of n bond labels.
  static CoxeterMatrix parse(std::istream& is);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[i * rank_ + j]; }

private:
  int rank_ = 0;
  std::vector<int> entries_;
};

/// Immutable root system and reflection tables of a finite Coxeter group.
///
/// Roots [0, N) are positive with the simple roots first (index i is alpha_i);
/// root k + N is the negative of root k.
class CoxeterSystem
{
public:
  static constexpr std::size_t kDefaultOrbitCap = 100000;

  static CoxeterSystem build(const CoxeterMatrix& matrix,
                             std::size_t orbit_cap = kDefaultOrbitCap);
  static CoxeterSystem from_type(std::string_view type,
                                 std::size_t orbit_cap = kDefaultOrbitCap);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }

  const Root& root(RootIndex r) const { return roots_[r]; }
  std::optional<RootIndex> find(const Root& coords) const;

  bool is_positive(RootIndex r) const { return r < num_positive_; }
  RootIndex neg(RootIndex r) const
  { return r < num_positive_ ? r + num_positive_ : r - num_positive_; }
  RootIndex positive_part(RootIndex r) const
  { return r < num_positive_ ? r : r - num_positive_; }

  RootIndex apply_generator(Generator s, RootIndex r) const
  { return simple_perm_[static_cast<std::size_t>(s) * num_roots() + r]; }

  /// Image of root r under the reflection in root t (t of either sign).
  RootIndex reflect(RootIndex t, RootIndex r) const
  {
    return refl_perm_[static_cast<std::size_t>(positive_part(t)) * num_roots() + r];
  }

  std::span<const RootIndex> simple_perm(Generator s) const
  {
    return {simple_perm_.data() + static_cast<std::size_t>(s) * num_roots(),
            static_cast<std::size_t>(num_roots())};
  }
  std::span<const RootIndex> reflection_perm(RootIndex t) const
  {
    return {refl_perm_.data() +
              static_cast<std::size_t>(positive_part(t)) * num_roots(),
            static_cast<std::size_t>(num_roots())};
  }

private:
  CoxeterSystem() = default;

  CoxeterMatrix matrix_;
  int num_positive_ = 0;
  std::vector<Root> roots_;
  std::map<Root, RootIndex> index_;
  std::vector<RootIndex> simple_perm_;
  std::vector<RootIndex> refl_perm_;
};

/// Group element stored as its action on root indices:
/// perm[k] is the index of w(root k).
class Element
{
public:
  static Element identity(const CoxeterSystem& sys);
  /// Product q_1 q_2 ... q_m, factors multiplied left to right.
  static Element from_word(const CoxeterSystem& sys, std::span<const Generator> word);

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  RootIndex apply(RootIndex r) const { return perm_[r]; }
  RootIndex apply_inverse(RootIndex r) const { return inv_[r]; }

  /// l(ws) < l(w)
  bool is_right_descent(Generator s) const { return perm_[s] >= num_positive(); }
  /// l(sw) < l(w)
  bool is_left_descent(Generator s) const { return inv_[s] >= num_positive(); }

  /// w <- w s
  void multiply_right(const CoxeterSystem& sys, Generator s);
  /// w <- s w
  void multiply_left(const CoxeterSystem& sys, Generator s);

  Element inverse() const;
  Element operator*(const Element& o) const;

  /// Positive roots sent negative by w, ascending.
  std::vector<RootIndex> inversion_set() const;

  bool operator==(const Element& o) const { return perm_ == o.perm_; }

  std::span<const RootIndex> permutation() const { return perm_; }

private:
  Element() = default;
  int num_positive() const { return static_cast<int>(perm_.size() / 2); }
  void recount();

  std::vector<RootIndex> perm_;
  std::vector<RootIndex> inv_;
  int length_ = 0;
};

/// Demazure product: left-to-right fold keeping only length-increasing letters.
Element demazure(const CoxeterSystem& sys, std::span<const Generator> word);

Element longest_element(const CoxeterSystem& sys);

/// Some reduced word for w, obtained by stripping right descents.
Word reduced_word(const CoxeterSystem& sys, const Element& w);

/// c-sorting word of target: the first reduced subword of c c c ... for target.
Word sorting_word(const CoxeterSystem& sys, const Element& target,
                  std::span<const Generator> c);

/// c^k followed by the c-sorting word of the longest element.
Word multicluster_word(const CoxeterSystem& sys, std::span<const Generator> c, int k);

/// "s1 s3 s2" <-> {0, 2, 1}. Empty string and "e" are the empty word.
Word parse_word(std::string_view text, int rank);
std::string format_word(std::span<const Generator> word);

} // namespace subword

#endif
