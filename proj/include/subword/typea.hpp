#ifndef SUBWORD_TYPEA_HPP
#define SUBWORD_TYPEA_HPP

#include "subword/subword.hpp"

#include <string>
#include <utility>
#include <vector>

namespace subword::typea {

/// Primitive network N_Q: n+1 levels (1-based, bottom to top) and one
/// commutator per letter, the k-th joining levels p and p+1 when q_k = s_p.
struct Network
{
  int levels = 0;
  std::vector<int> commutators;   // lower level p of each commutator
};

struct Arrangement
{
  Network network;
  std::vector<bool> contact;              // per commutator; false means crossing
  /// labels[k][l-1]: pseudoline on level l just before commutator k+1;
  /// labels[m] is the right end.
  std::vector<std::vector<int>> labels;

  /// Order of the pseudolines on the right, bottom to top.
  const std::vector<int>& right_order() const { return labels.back(); }
  std::vector<int> contacts() const;   // 1-based commutator positions
  int crossing_count() const;
};

/// Throws NotTypeA unless the system is of type A.
void require_type_a(const CoxeterSystem& sys);
bool is_type_a(const CoxeterSystem& sys);

Network network_from_word(const Word& word, int rank);
Arrangement arrangement(const Instance& inst, const Facet& facet);

/// Labels (top, bottom) of the pseudolines reaching commutator k (1-based).
std::pair<int, int> root_readout(const Arrangement& arr, int k);
std::pair<int, int> root_readout(const Instance& inst, const Facet& facet, int k);

/// Root e_top - e_bottom in simple-root coordinates, with alpha_i = e_{i+1} - e_i.
Root embed_difference(int top, int bottom, int rank);

/// One-line permutation such as [4,1,3,2] to a word in adjacent transpositions.
Word word_from_permutation(const std::vector<int>& one_line);

enum class RenderFormat { kAscii, kSvg };

std::string render(const Arrangement& arr, RenderFormat format);

} // namespace subword::typea

#endif
