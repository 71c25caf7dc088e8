#include "subword/coxeter.hpp"

#include "subword/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>
#include <istream>
#include <ostream>
#include <sstream>

namespace subword {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw OrbitBoundExceeded("root coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw OrbitBoundExceeded("root coordinate overflow");
  return r;
}

} // namespace

QuadInt QuadInt::operator+(const QuadInt& o) const
{
  return {checked_add(a_, o.a_), checked_add(b_, o.b_)};
}

QuadInt QuadInt::operator-(const QuadInt& o) const
{
  return *this + (-o);
}

QuadInt QuadInt::operator-() const
{
  return {-a_, -b_};
}

QuadInt QuadInt::operator*(const QuadInt& o) const
{
  // (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1
  auto bb = checked_mul(b_, o.b_);
  auto a = checked_add(checked_mul(a_, o.a_), bb);
  auto b = checked_add(checked_add(checked_mul(a_, o.b_), checked_mul(b_, o.a_)), bb);
  return {a, b};
}

int QuadInt::sign() const
{
  // 2(a + b phi) = (2a + b) + b sqrt5
  std::int64_t x = 2 * a_ + b_;
  std::int64_t y = b_;
  auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
  if (sgn(x) == sgn(y) || y == 0) return x != 0 ? sgn(x) : sgn(y);
  if (x == 0) return sgn(y);
  // opposite signs: compare x^2 against 5 y^2
  __int128 xx = static_cast<__int128>(x) * x;
  __int128 yy = static_cast<__int128>(y) * y * 5;
  if (xx == yy) return 0;
  return xx > yy ? sgn(x) : sgn(y);
}

double QuadInt::to_double() const
{
  return static_cast<double>(a_) + static_cast<double>(b_) * (1.0 + std::sqrt(5.0)) / 2.0;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x)
{
  if (x.irrational() == 0) return os << x.rational();
  return os << "(" << x.rational() << (x.irrational() < 0 ? "-" : "+")
            << std::abs(x.irrational()) << "phi)";
}

// ---------------------------------------------------------------------------

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
: rank_(rank), entries_(std::move(entries))
{
  if (rank_ < 1)
    throw InvalidMatrix("rank must be positive");
  if (entries_.size() != static_cast<std::size_t>(rank_) * rank_)
    throw InvalidMatrix("expected " + std::to_string(rank_ * rank_) + " entries");
  for (int i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 1)
      throw InvalidMatrix("diagonal entry m(" + std::to_string(i + 1) + "," +
                          std::to_string(i + 1) + ") must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      int m = (*this)(i, j);
      if (m != (*this)(j, i))
        throw InvalidMatrix("matrix is not symmetric");
      if (m < 2 || m > 6)
        throw InvalidMatrix("bond m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") = " + std::to_string(m) + " outside {2,...,6}");
    }
  }
}

namespace {

CoxeterMatrix from_bonds(int rank, const std::vector<std::tuple<int, int, int>>& bonds)
{
  std::vector<int> e(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i) e[i * rank + i] = 1;
  for (auto [i, j, m] : bonds) {
    e[i * rank + j] = m;
    e[j * rank + i] = m;
  }
  return CoxeterMatrix(rank, std::move(e));
}

CoxeterMatrix path(int rank, int last_bond = 3)
{
  std::vector<std::tuple<int, int, int>> bonds;
  for (int i = 0; i + 1 < rank; ++i)
    bonds.emplace_back(i, i + 1, i + 2 == rank ? last_bond : 3);
  return from_bonds(rank, bonds);
}

} // namespace

CoxeterMatrix CoxeterMatrix::from_type(std::string_view type)
{
  std::string t;
  for (char ch : type)
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) t += ch;
  auto bad = [&] { return InvalidMatrix("unsupported type string '" + std::string(type) + "'"); };
  if (t.size() < 2) throw bad();

  if (t.rfind("I2(", 0) == 0 && t.back() == ')') {
    int m = 0;
    try {
      m = std::stoi(t.substr(3, t.size() - 4));
    } catch (const std::exception&) {
      throw bad();
    }
    if (m < 2 || m > 6)
      throw InvalidMatrix("dihedral type I2(" + std::to_string(m) + ") unsupported; bond must be 2..6");
    return from_bonds(2, {{0, 1, m}});
  }

  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  int n = 0;
  std::size_t used = 0;
  try {
    n = std::stoi(t.substr(1), &used);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used + 1 != t.size() || n < 1) throw bad();

  switch (family) {
  case 'A':
    return path(n);
  case 'B':
  case 'C':
    if (n < 2) throw bad();
    return path(n, 4);
  case 'D': {
    if (n < 4) throw bad();
    std::vector<std::tuple<int, int, int>> bonds;
    for (int i = 0; i + 2 < n; ++i) bonds.emplace_back(i, i + 1, 3);
    bonds.emplace_back(n - 3, n - 1, 3);
    return from_bonds(n, bonds);
  }
  case 'E': {
    if (n < 6 || n > 8) throw bad();
    // Bourbaki labelling: 1-3-4-5-6(-7-8), with 2 attached to 4.
    std::vector<std::tuple<int, int, int>> bonds{{0, 2, 3}, {1, 3, 3}, {2, 3, 3}};
    for (int i = 3; i + 1 < n; ++i) bonds.emplace_back(i, i + 1, 3);
    return from_bonds(n, bonds);
  }
  case 'F':
    if (n != 4) throw bad();
    return from_bonds(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
  case 'G':
    if (n != 2) throw bad();
    return from_bonds(2, {{0, 1, 6}});
  case 'H':
    if (n != 3 && n != 4) throw bad();
    if (n == 3) return from_bonds(3, {{0, 1, 5}, {1, 2, 3}});
    return from_bonds(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}});
  default:
    throw bad();
  }
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& is)
{
  std::vector<std::vector<std::pair<int, int>>> tokens; // (value, column) per line
  std::vector<int> line_numbers;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::pair<int, int>> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      if (line[pos] == '#') break;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::string tok = line.substr(start, pos - start);
      int col = static_cast<int>(start) + 1;
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a non-negative integer, got '" + tok + "'", lineno, col);
      if (tok.size() > 6)
        throw ParseError("bond label '" + tok + "' too large", lineno, col);
      row.emplace_back(std::stoi(tok), col);
    }
    if (!row.empty()) {
      tokens.push_back(std::move(row));
      line_numbers.push_back(lineno);
    }
  }
  if (tokens.empty()) throw ParseError("empty Coxeter matrix", lineno + 1, 1);
  if (tokens[0].size() != 1)
    throw ParseError("first line must hold only the rank", line_numbers[0], tokens[0][1].second);
  int n = tokens[0][0].first;
  if (n < 1) throw ParseError("rank must be positive", line_numbers[0], tokens[0][0].second);
  if (tokens.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                       std::to_string(tokens.size() - 1),
                     line_numbers.back(), 1);
  std::vector<int> entries;
  for (int i = 0; i < n; ++i) {
    const auto& row = tokens[i + 1];
    if (row.size() != static_cast<std::size_t>(n))
      throw ParseError("expected " + std::to_string(n) + " entries in row", line_numbers[i + 1],
                       row.back().second);
    for (int j = 0; j < n; ++j) {
      int m = row[j].first;
      bool ok = (i == j) ? m == 1 : (m >= 2 && m <= 6);
      if (!ok)
        throw ParseError(i == j ? "diagonal entry must be 1"
                                : "bond label must be in 2..6 (infinite and larger bonds unsupported)",
                         line_numbers[i + 1], row[j].second);
      entries.push_back(m);
    }
  }
  try {
    return CoxeterMatrix(n, std::move(entries));
  } catch (const InvalidMatrix& e) {
    throw ParseError(e.what(), line_numbers[1], 1);
  }
}

// ---------------------------------------------------------------------------

namespace {

// Entries C(i,j) with s_i(alpha_j) = alpha_j - C(i,j) alpha_i.
// The product C(i,j) C(j,i) must equal 4 cos^2(pi/m).
std::vector<QuadInt> cartan(const CoxeterMatrix& m)
{
  int n = m.rank();
  std::vector<QuadInt> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      QuadInt v;
      if (i == j) {
        v = 2;
      } else {
        switch (m(i, j)) {
        case 2: v = 0; break;
        case 3: v = -1; break;
        case 4: v = i < j ? -1 : -2; break;
        case 5: v = QuadInt(0, -1); break;
        case 6: v = i < j ? -1 : -3; break;
        }
      }
      c[i * n + j] = v;
    }
  }
  return c;
}

int root_sign(const Root& r)
{
  bool pos = false, neg = false;
  for (const auto& x : r) {
    int s = x.sign();
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos && neg) return 0;
  return pos ? 1 : -1;
}

} // namespace

CoxeterSystem CoxeterSystem::build(const CoxeterMatrix& matrix, std::size_t orbit_cap)
{
  CoxeterSystem sys;
  sys.matrix_ = matrix;
  const int n = matrix.rank();
  const auto c = cartan(matrix);

  auto act = [&](Generator s, const Root& v) {
    Root w = v;
    QuadInt pairing;
    for (int j = 0; j < n; ++j) pairing = pairing + c[s * n + j] * v[j];
    w[s] = w[s] - pairing;
    return w;
  };

  // Orbit closure of the simple roots, positive part only. parent[k] records
  // (generator, source root) so that root k = s(root source).
  std::vector<Root> pos;
  std::vector<std::pair<Generator, RootIndex>> parent;
  std::map<Root, RootIndex> seen;
  for (int i = 0; i < n; ++i) {
    Root r(n);
    r[i] = 1;
    seen.emplace(r, i);
    pos.push_back(std::move(r));
    parent.emplace_back(-1, -1);
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    for (Generator s = 0; s < n; ++s) {
      if (static_cast<int>(k) == s) continue;
      Root img = act(s, pos[k]);
      if (seen.count(img)) continue;
      int sg = root_sign(img);
      if (sg <= 0)
        throw InvalidMatrix("reflection produced a mixed-sign root; matrix is not of finite type");
      if (2 * (pos.size() + 1) > orbit_cap)
        throw OrbitBoundExceeded("root orbit exceeds " + std::to_string(orbit_cap) +
                                 " roots; the group is infinite or too large");
      seen.emplace(img, static_cast<RootIndex>(pos.size()));
      pos.push_back(std::move(img));
      parent.emplace_back(s, static_cast<RootIndex>(k));
    }
  }

  const int npos = static_cast<int>(pos.size());
  sys.num_positive_ = npos;
  sys.roots_ = pos;
  for (const auto& r : pos) {
    Root m(n);
    for (int j = 0; j < n; ++j) m[j] = -r[j];
    sys.roots_.push_back(std::move(m));
  }
  for (RootIndex k = 0; k < 2 * npos; ++k) sys.index_.emplace(sys.roots_[k], k);

  const std::size_t total = 2 * static_cast<std::size_t>(npos);
  sys.simple_perm_.resize(n * total);
  for (Generator s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < total; ++k) {
      auto it = sys.index_.find(act(s, sys.roots_[k]));
      if (it == sys.index_.end())
        throw InvalidMatrix("root system not closed under simple reflections");
      sys.simple_perm_[s * total + k] = it->second;
    }
  }

  // s_{s(beta)} = s s_beta s, walking the orbit tree from the simple roots.
  sys.refl_perm_.resize(npos * total);
  for (RootIndex t = 0; t < npos; ++t) {
    auto* out = sys.refl_perm_.data() + t * total;
    auto [s, src] = parent[t];
    if (s < 0) {
      std::copy_n(sys.simple_perm_.data() + t * total, total, out);
      continue;
    }
    const auto* sp = sys.simple_perm_.data() + s * total;
    const auto* base = sys.refl_perm_.data() + src * total;
    for (std::size_t k = 0; k < total; ++k) out[k] = sp[base[sp[k]]];
  }
  return sys;
}

CoxeterSystem CoxeterSystem::from_type(std::string_view type, std::size_t orbit_cap)
{
  return build(CoxeterMatrix::from_type(type), orbit_cap);
}

std::optional<RootIndex> CoxeterSystem::find(const Root& coords) const
{
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Element Element::identity(const CoxeterSystem& sys)
{
  Element e;
  e.perm_.resize(sys.num_roots());
  for (RootIndex k = 0; k < sys.num_roots(); ++k) e.perm_[k] = k;
  e.inv_ = e.perm_;
  return e;
}

Element Element::from_word(const CoxeterSystem& sys, std::span<const Generator> word)
{
  Element e = identity(sys);
  for (Generator s : word) e.multiply_right(sys, s);
  return e;
}

void Element::recount()
{
  const int np = num_positive();
  length_ = static_cast<int>(std::count_if(perm_.begin(), perm_.begin() + np,
                                           [np](RootIndex r) { return r >= np; }));
}

void Element::multiply_right(const CoxeterSystem& sys, Generator s)
{
  // (ws)(beta) = w(s(beta)); s acts as an involution on root indices.
  length_ += is_right_descent(s) ? -1 : 1;
  auto sp = sys.simple_perm(s);
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (static_cast<std::size_t>(sp[k]) > k) std::swap(perm_[k], perm_[sp[k]]);
  for (auto& r : inv_) r = sp[r];
}

void Element::multiply_left(const CoxeterSystem& sys, Generator s)
{
  length_ += is_left_descent(s) ? -1 : 1;
  auto sp = sys.simple_perm(s);
  for (auto& r : perm_) r = sp[r];
  for (std::size_t k = 0; k < inv_.size(); ++k)
    if (static_cast<std::size_t>(sp[k]) > k) std::swap(inv_[k], inv_[sp[k]]);
}

Element Element::inverse() const
{
  Element e = *this;
  e.perm_.swap(e.inv_);
  return e;
}

Element Element::operator*(const Element& o) const
{
  Element e;
  e.perm_.resize(perm_.size());
  e.inv_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) e.perm_[k] = perm_[o.perm_[k]];
  for (std::size_t k = 0; k < perm_.size(); ++k) e.inv_[e.perm_[k]] = static_cast<RootIndex>(k);
  e.recount();
  return e;
}

std::vector<RootIndex> Element::inversion_set() const
{
  std::vector<RootIndex> out;
  const int np = num_positive();
  for (RootIndex k = 0; k < np; ++k)
    if (perm_[k] >= np) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------

Element demazure(const CoxeterSystem& sys, std::span<const Generator> word)
{
  Element w = Element::identity(sys);
  for (Generator s : word)
    if (!w.is_right_descent(s)) w.multiply_right(sys, s);
  return w;
}

Element longest_element(const CoxeterSystem& sys)
{
  Element w = Element::identity(sys);
  for (bool grew = true; grew;) {
    grew = false;
    for (Generator s = 0; s < sys.rank(); ++s) {
      if (!w.is_right_descent(s)) {
        w.multiply_right(sys, s);
        grew = true;
      }
    }
  }
  return w;
}

Word reduced_word(const CoxeterSystem& sys, const Element& w)
{
  Element r = w;
  Word out;
  while (!r.is_identity()) {
    for (Generator s = 0; s < sys.rank(); ++s) {
      if (r.is_right_descent(s)) {
        out.push_back(s);
        r.multiply_right(sys, s);
        break;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Word sorting_word(const CoxeterSystem& sys, const Element& target, std::span<const Generator> c)
{
  Word out;
  if (target.is_identity()) return out;
  if (c.empty()) throw Error("Coxeter element word is empty");
  Element r = target;
  std::size_t since_emit = 0;
  for (std::size_t k = 0; !r.is_identity(); k = (k + 1) % c.size()) {
    Generator s = c[k];
    if (r.is_left_descent(s)) {
      out.push_back(s);
      r.multiply_left(sys, s);
      since_emit = 0;
    } else if (++since_emit > c.size()) {
      throw Error("word does not contain every generator; not a Coxeter element");
    }
  }
  return out;
}

Word multicluster_word(const CoxeterSystem& sys, std::span<const Generator> c, int k)
{
  Word out;
  for (int rep = 0; rep < k; ++rep) out.insert(out.end(), c.begin(), c.end());
  Word w0 = sorting_word(sys, longest_element(sys), c);
  out.insert(out.end(), w0.begin(), w0.end());
  return out;
}

Word parse_word(std::string_view text, int rank)
{
  Word out;
  std::size_t pos = 0;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1) == "e")
    return out;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    int col = static_cast<int>(start) + 1;
    if (tok.size() < 2 || tok[0] != 's' ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        tok.size() > 8)
      throw ParseError("expected a generator name s1..s" + std::to_string(rank) + ", got '" +
                         std::string(tok) + "'",
                       1, col);
    int g = std::stoi(std::string(tok.substr(1)));
    if (g < 1 || g > rank)
      throw ParseError("generator '" + std::string(tok) + "' out of range s1..s" + std::to_string(rank), 1, col);
    out.push_back(g - 1);
  }
  return out;
}

std::string format_word(std::span<const Generator> word)
{
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << 's' << word[k] + 1;
  return os.str();
}

} // namespace subword
