#include "alignh/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace alignh {

std::string span_to_string(const Span& s) {
  return "[" + std::to_string(s.begin) + "," + std::to_string(s.end) + "]";
}

std::string link_to_string(const Link& l) {
  return span_to_string(l.e) + "x" + span_to_string(l.f);
}

void WeightFn::set(const Link& link, const Weight& w) {
  if (w < Weight(0)) throw std::invalid_argument("negative link weight");
  if (link.e.begin < 0 || link.e.begin >= link.e.end || link.f.begin < 0 ||
      link.f.begin >= link.f.end)
    throw std::invalid_argument("degenerate span in link " + link_to_string(link));
  auto not_01 = [](const Weight& x) { return x != Weight(0) && x != Weight(1); };
  auto it = entries_.find(link);
  if (it != entries_.end()) {
    if (not_01(it->second)) --nontrivial_count_;
    it->second = w;
  } else {
    entries_.emplace(link, w);
  }
  if (not_01(w)) ++nontrivial_count_;
}

Weight WeightFn::operator()(const Link& link) const {
  auto it = entries_.find(link);
  return it == entries_.end() ? Weight(0) : it->second;
}

void Alignment::normalize() { std::sort(links.begin(), links.end()); }

namespace {

// Marks covered words (1-based); reports the first double-cover / range
// violation through `message`.
bool cover_side(const std::vector<Link>& links, bool e_side, int n,
                std::string& message) {
  std::vector<int> covered(n + 1, 0);
  for (const Link& l : links) {
    const Span& s = e_side ? l.e : l.f;
    if (s.begin < 0 || s.end > n || s.begin >= s.end) {
      message = std::string(e_side ? "e" : "f") + "-span out of range in link " +
                link_to_string(l);
      return false;
    }
    for (int w = s.begin + 1; w <= s.end; ++w) {
      if (covered[w]) {
        message = std::string(e_side ? "e" : "f") + "-word " +
                  std::to_string(w) + " covered twice";
        return false;
      }
      covered[w] = 1;
    }
  }
  for (int w = 1; w <= n; ++w) {
    if (!covered[w]) {
      message = std::string(e_side ? "e" : "f") + "-word " + std::to_string(w) +
                " uncovered";
      return false;
    }
  }
  return true;
}

}  // namespace

ValidityReport check_alignment(const WsaInstance& inst, const Alignment& a) {
  ValidityReport report;
  if (!cover_side(a.links, true, inst.e.size(), report.message) ||
      !cover_side(a.links, false, inst.f.size(), report.message)) {
    report.valid = false;
  }
  return report;
}

bool is_valid_alignment(const WsaInstance& inst, const Alignment& a) {
  return check_alignment(inst, a).valid;
}

Weight alignment_weight(const WsaInstance& inst, const Alignment& a) {
  ValidityReport report = check_alignment(inst, a);
  if (!report.valid)
    throw std::invalid_argument("invalid alignment: " + report.message);
  Weight w(1);
  for (const Link& l : a.links) {
    w *= inst.phi(l);
    if (w == Weight(0)) return w;  // annihilates
  }
  return w;
}

WsaInstance pad_to_bijective(const Sentence& e, const Sentence& f,
                             const WeightFn& phi) {
  if (f.size() >= e.size())
    throw std::invalid_argument("padding needs |f| < |e|");
  int pad = (e.size() + 1) / 2;
  WsaInstance out;
  out.e = e;
  out.f = f;
  for (int i = 1; i <= pad; ++i)
    out.f.tokens.push_back("null#" + std::to_string(i));
  out.phi = phi;
  int base = f.size();
  for (int eb = 0; eb < e.size(); ++eb) {
    for (int ee = eb + 1; ee <= e.size(); ++ee) {
      for (int fb = base; fb < out.f.size(); ++fb) {
        for (int fe = fb + 1; fe <= out.f.size(); ++fe) {
          out.phi.set(Link(Span(eb, ee), Span(fb, fe)), Weight(1));
        }
      }
    }
  }
  return out;
}

int partition_guard_from_env() {
  const char* value = std::getenv(kGuardEnvVar);
  if (value == nullptr || *value == '\0') return kDefaultPartitionGuard;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 1)
    throw std::invalid_argument(std::string(kGuardEnvVar) + " must be a positive integer");
  return static_cast<int>(parsed);
}

std::string boundary_bits(const std::vector<Span>& spans, int n) {
  std::string bits(n > 0 ? n - 1 : 0, '0');
  for (const Span& s : spans) {
    if (s.end < n) bits[s.end - 1] = '1';
  }
  return bits;
}

std::vector<Span> spans_from_bits(const std::string& bits) {
  std::vector<Span> spans;
  int n = static_cast<int>(bits.size()) + 1;
  int begin = 0;
  for (int p = 1; p < n; ++p) {
    char c = bits[p - 1];
    if (c != '0' && c != '1')
      throw std::invalid_argument("witness bits must be 0/1");
    if (c == '1') {
      spans.emplace_back(begin, p);
      begin = p;
    }
  }
  spans.emplace_back(begin, n);
  return spans;
}

void for_each_partition(int n, std::optional<int> exactly, int guard,
                        const std::function<bool(const std::vector<Span>&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative sentence length");
  if (n > guard)
    throw std::invalid_argument("size-guard: n=" + std::to_string(n) +
                                " exceeds guard " + std::to_string(guard) +
                                " (raise via " + kGuardEnvVar + " or --guard)");
  if (n == 0) {
    if (!exactly || *exactly == 0) fn({});
    return;
  }
  if (exactly && (*exactly < 1 || *exactly > n)) return;
  const int bits = n - 1;
  std::vector<Span> spans;
  // Bit (bits - p) of the mask is boundary position p, so ascending masks
  // stream lexicographically ascending boundary bitstrings.
  auto emit = [&](uint64_t mask) {
    spans.clear();
    int begin = 0;
    for (int p = 1; p <= bits; ++p) {
      if ((mask >> (bits - p)) & 1) {
        spans.emplace_back(begin, p);
        begin = p;
      }
    }
    spans.emplace_back(begin, n);
    return fn(spans);
  };
  if (!exactly) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << bits); ++mask) {
      if (!emit(mask)) return;
    }
    return;
  }
  // Fixed phrase count: Gosper's hack walks the popcount-(k-1) masks in
  // increasing order without scanning the rest.
  const int k = *exactly - 1;
  if (k == 0) {
    emit(0);
    return;
  }
  uint64_t mask = (uint64_t(1) << k) - 1;
  const uint64_t limit = uint64_t(1) << bits;
  while (mask < limit) {
    if (!emit(mask)) return;
    uint64_t low = mask & (~mask + 1);
    uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
}

std::vector<std::vector<Span>> enumerate_partitions(int n,
                                                    std::optional<int> exactly,
                                                    int guard) {
  std::vector<std::vector<Span>> out;
  for_each_partition(n, exactly, guard, [&](const std::vector<Span>& spans) {
    out.push_back(spans);
    return true;
  });
  return out;
}

}  // namespace alignh
