#include "subword/typea.hpp"

#include "subword/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace subword::typea {

bool is_type_a(const CoxeterSystem& sys)
{
  const auto& m = sys.matrix();
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j)
      if (m(i, j) != (j == i + 1 ? 3 : 2)) return false;
  return true;
}

void require_type_a(const CoxeterSystem& sys)
{
  if (!is_type_a(sys))
    throw NotTypeA("sorting networks are only defined for type A systems");
}

Network network_from_word(const Word& word, int rank)
{
  Network net;
  net.levels = rank + 1;
  for (Generator s : word) {
    if (s < 0 || s >= rank)
      throw NotTypeA("letter s" + std::to_string(s + 1) + " is not a generator of A" +
                     std::to_string(rank));
    net.commutators.push_back(s + 1);
  }
  return net;
}

std::vector<int> Arrangement::contacts() const
{
  std::vector<int> out;
  for (std::size_t k = 0; k < contact.size(); ++k)
    if (contact[k]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

int Arrangement::crossing_count() const
{
  return static_cast<int>(std::count(contact.begin(), contact.end(), false));
}

Arrangement arrangement(const Instance& inst, const Facet& facet)
{
  require_type_a(inst.system());
  Arrangement arr;
  arr.network = network_from_word(inst.word(), inst.system().rank());
  const int m = inst.size();
  std::vector<int> lab(arr.network.levels);
  for (int l = 0; l < arr.network.levels; ++l) lab[l] = l + 1;
  arr.labels.push_back(lab);
  for (int k = 1; k <= m; ++k) {
    const bool touch = facet.contains(k);
    arr.contact.push_back(touch);
    if (!touch) {
      int p = arr.network.commutators[k - 1];
      std::swap(lab[p - 1], lab[p]);
    }
    arr.labels.push_back(lab);
  }
  return arr;
}

std::pair<int, int> root_readout(const Arrangement& arr, int k)
{
  int p = arr.network.commutators[k - 1];
  const auto& before = arr.labels[k - 1];
  return {before[p], before[p - 1]};
}

std::pair<int, int> root_readout(const Instance& inst, const Facet& facet, int k)
{
  return root_readout(arrangement(inst, facet), k);
}

Root embed_difference(int top, int bottom, int rank)
{
  Root r(rank);
  int lo = std::min(top, bottom), hi = std::max(top, bottom);
  int sgn = top > bottom ? 1 : -1;
  // e_hi - e_lo = alpha_lo + ... + alpha_{hi-1}
  for (int i = lo; i < hi; ++i) r[i - 1] = sgn;
  return r;
}

Word word_from_permutation(const std::vector<int>& one_line)
{
  const int size = static_cast<int>(one_line.size());
  std::vector<int> seen(size + 1, 0);
  for (int v : one_line) {
    if (v < 1 || v > size || seen[v]++)
      throw Error("not a permutation of 1.." + std::to_string(size));
  }
  // insertion sort by adjacent swaps; each swap right-multiplies by s_i
  std::vector<int> arr = one_line;
  Word swaps;
  for (int i = 1; i < size; ++i)
    for (int k = i; k > 0 && arr[k - 1] > arr[k]; --k) {
      std::swap(arr[k - 1], arr[k]);
      swaps.push_back(k - 1);
    }
  return Word(swaps.rbegin(), swaps.rend());
}

namespace {

std::string render_ascii(const Arrangement& arr)
{
  const int levels = arr.network.levels;
  const int m = static_cast<int>(arr.contact.size());
  const int lw = static_cast<int>(std::to_string(levels).size());
  std::ostringstream os;

  os << std::string(lw + 1, ' ');
  for (int k = 1; k <= m; ++k) os << std::setw(4) << k;
  os << '\n';

  for (int l = levels; l >= 1; --l) {
    os << std::setw(lw) << l << ' ';
    for (int k = 0; k < m; ++k) {
      int p = arr.network.commutators[k];
      std::string cell = "---";
      if (l == p + 1) cell = arr.contact[k] ? "-v-" : "\\ /";
      else if (l == p) cell = arr.contact[k] ? "-^-" : "/ \\";
      os << '-' << cell;
    }
    os << "- " << arr.right_order()[l - 1] << '\n';
    if (l == 1) break;
    // gap between levels l and l-1
    std::string gap(lw + 1, ' ');
    for (int k = 0; k < m; ++k) {
      int p = arr.network.commutators[k];
      gap += ' ';
      if (p == l - 1) gap += arr.contact[k] ? " | " : " X ";
      else gap += "   ";
    }
    while (!gap.empty() && gap.back() == ' ') gap.pop_back();
    os << gap << '\n';
  }
  return os.str();
}

std::string render_svg(const Arrangement& arr)
{
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  const int levels = arr.network.levels;
  const int m = static_cast<int>(arr.contact.size());
  const int col = 40, pitch = 40, margin = 40;
  const int width = 2 * margin + m * col + 2 * 20;
  const int height = 2 * margin + (levels - 1) * pitch;
  const int x0 = margin + 20;
  auto y = [&](double level) { return margin + (levels - level) * pitch; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  os << "  <g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int k = 0; k < m; ++k) {
    int p = arr.network.commutators[k];
    double x = x0 + (k + 0.5) * col;
    os << "    <line x1=\"" << x << "\" y1=\"" << y(p + 1) << "\" x2=\"" << x << "\" y2=\"" << y(p)
       << "\"/>\n";
  }
  os << "  </g>\n";

  for (int label = 1; label <= levels; ++label) {
    os << "  <polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << palette[(label - 1) % 8]
       << "\" points=\"";
    int level = label;
    os << x0 - 20 << ',' << y(level);
    for (int k = 0; k < m; ++k) {
      int p = arr.network.commutators[k];
      double xl = x0 + (k + 0.2) * col, xm = x0 + (k + 0.5) * col, xr = x0 + (k + 0.8) * col;
      if (level != p && level != p + 1) continue;
      int other = level == p ? p + 1 : p;
      if (arr.contact[k]) {
        os << ' ' << xl << ',' << y(level) << ' ' << xm << ',' << y((level + other) / 2.0) << ' ' << xr
           << ',' << y(level);
      } else {
        os << ' ' << xl << ',' << y(level) << ' ' << xr << ',' << y(other);
        level = other;
      }
    }
    os << ' ' << x0 + m * col + 20 << ',' << y(level) << "\"/>\n";
  }

  os << "  <g font-family=\"sans-serif\" font-size=\"14\">\n";
  for (int l = 1; l <= levels; ++l) {
    os << "    <text x=\"" << margin - 16 << "\" y=\"" << y(l) + 5 << "\">" << l << "</text>\n";
    os << "    <text x=\"" << x0 + m * col + 26 << "\" y=\"" << y(l) + 5 << "\">"
       << arr.right_order()[l - 1] << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

} // namespace

std::string render(const Arrangement& arr, RenderFormat format)
{
  return format == RenderFormat::kAscii ? render_ascii(arr) : render_svg(arr);
}

} // namespace subword::typea
