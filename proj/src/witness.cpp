#include "alignh/witness.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace alignh {

namespace {

// e-spans of a valid alignment, sorted; validity must be checked first.
std::vector<Span> sorted_side(const Alignment& a, bool e_side) {
  std::vector<Span> spans;
  spans.reserve(a.links.size());
  for (const Link& l : a.links) spans.push_back(e_side ? l.e : l.f);
  std::sort(spans.begin(), spans.end());
  return spans;
}

void require_valid(const WsaInstance& inst, const Alignment& a) {
  ValidityReport report = check_alignment(inst, a);
  if (!report.valid)
    throw std::invalid_argument("invalid alignment: " + report.message);
}

}  // namespace

int MatrixWitness::ones() const {
  int count = 0;
  for (uint8_t c : cells) count += c != 0;
  return count;
}

PartitionWitness encode_partition(const WsaInstance& inst, const Alignment& a) {
  require_valid(inst, a);
  for (const Link& l : a.links) {
    if (l.f.length() != 1)
      throw std::invalid_argument(
          "partition witness needs singleton f-phrases; got " +
          link_to_string(l));
  }
  return PartitionWitness{boundary_bits(sorted_side(a, true), inst.e.size())};
}

DualWitness encode_dual(const WsaInstance& inst, const Alignment& a,
                        bool with_permutation) {
  require_valid(inst, a);
  DualWitness w;
  std::vector<Span> e_spans = sorted_side(a, true);
  std::vector<Span> f_spans = sorted_side(a, false);
  w.e_bits = boundary_bits(e_spans, inst.e.size());
  w.f_bits = boundary_bits(f_spans, inst.f.size());
  if (with_permutation) {
    for (const Span& es : e_spans) {
      for (const Link& l : a.links) {
        if (l.e == es) {
          auto it = std::lower_bound(f_spans.begin(), f_spans.end(), l.f);
          w.permutation.push_back(static_cast<int>(it - f_spans.begin()));
          break;
        }
      }
    }
  }
  return w;
}

MatrixWitness encode_matrix(const WsaInstance& inst, const Alignment& a) {
  require_valid(inst, a);
  MatrixWitness m;
  m.rows = inst.f.size();
  m.cols = inst.e.size();
  m.cells.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (const Link& l : a.links) {
    for (int fw = l.f.begin; fw < l.f.end; ++fw) {
      for (int ew = l.e.begin; ew < l.e.end; ++ew) {
        m.cells[static_cast<std::size_t>(fw) * m.cols + ew] = 1;
      }
    }
  }
  return m;
}

std::vector<Span> decode_partition_spans(const std::string& bits, int e_size) {
  if (static_cast<int>(bits.size()) != std::max(0, e_size - 1))
    throw std::invalid_argument("witness length " + std::to_string(bits.size()) +
                                " != |e|-1 = " + std::to_string(e_size - 1));
  return spans_from_bits(bits);
}

PartitionWitness make_partition_witness(const std::string& bits, int e_size,
                                        std::optional<int> f_size) {
  std::vector<Span> spans = decode_partition_spans(bits, e_size);
  if (f_size && static_cast<int>(spans.size()) != *f_size)
    throw std::invalid_argument(
        "witness popcount " + std::to_string(spans.size() - 1) + " != |f|-1 = " +
        std::to_string(*f_size - 1));
  return PartitionWitness{bits};
}

int hamming_distance(const std::string& a, const std::string& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming: length mismatch " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

int edit_distance(const std::string& a, const std::string& b,
                  bool transpositions) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (int i = 0; i <= n; ++i) d[i][0] = i;
  for (int j = 0; j <= m; ++j) d[0][j] = j;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      int sub = d[i - 1][j - 1] + (a[i - 1] != b[j - 1]);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
      if (transpositions && i > 1 && j > 1 && a[i - 1] == b[j - 2] &&
          a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[n][m];
}

int dual_witness_distance(const DualWitness& a, const DualWitness& b) {
  return hamming_distance(a.concat_bits(), b.concat_bits());
}

int matrix_hamming(const MatrixWitness& a, const MatrixWitness& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix dimension mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.cells.size(); ++i)
    d += (a.cells[i] != 0) != (b.cells[i] != 0);
  return d;
}

MatrixWitness trivial_matrix_baseline(const WsaInstance& inst) {
  const int ne = inst.e.size();
  const int nf = inst.f.size();
  if (nf < 1 || ne < nf)
    throw std::invalid_argument("baseline needs |e| >= |f| >= 1");
  Alignment a;
  for (int i = 0; i < nf - 1; ++i)
    a.links.emplace_back(Span(i, i + 1), Span(i, i + 1));
  a.links.emplace_back(Span(nf - 1, ne), Span(nf - 1, nf));
  MatrixWitness m;
  m.rows = nf;
  m.cols = ne;
  m.cells.assign(static_cast<std::size_t>(nf) * ne, 0);
  for (const Link& l : a.links) {
    for (int fw = l.f.begin; fw < l.f.end; ++fw)
      for (int ew = l.e.begin; ew < l.e.end; ++ew)
        m.cells[static_cast<std::size_t>(fw) * ne + ew] = 1;
  }
  return m;
}

long trivial_matrix_bound(const WsaInstance& inst) {
  const long ne = inst.e.size();
  const long nf = inst.f.size();
  if (nf < 1 || ne < nf)
    throw std::invalid_argument("baseline needs |e| >= |f| >= 1");
  return ne * nf - 2 * nf;
}

PartitionWitness random_partition_baseline(int n, int ones, uint64_t seed) {
  if (n < 0 || ones < 0 || ones > n)
    throw std::invalid_argument("need 0 <= ones <= n");
  std::string bits(n, '0');
  std::fill(bits.begin(), bits.begin() + ones, '1');
  std::mt19937_64 rng(seed);
  // Fisher-Yates gives the uniform distribution over fixed-popcount strings.
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(bits[i], bits[pick(rng)]);
  }
  return PartitionWitness{bits};
}

}  // namespace alignh
