#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alignh/weight.hpp"

namespace alignh {

// Words are 1-based; spans use the 0-based in-between positions, so the span
// [i,j] with 0 <= i < j <= n covers words i+1..j.  A sentence of n words has
// n+1 in-between positions 0..n and n-1 interior ones 1..n-1.

struct Sentence {
  std::vector<std::string> tokens;

  Sentence() = default;
  explicit Sentence(std::vector<std::string> t) : tokens(std::move(t)) {}

  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence&) const = default;
};

struct Span {
  int begin = 0;  // in-between position
  int end = 0;    // in-between position, begin < end for nonempty spans

  Span() = default;
  Span(int b, int e) : begin(b), end(e) {}

  int length() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  auto operator<=>(const Span&) const = default;
};

std::string span_to_string(const Span& s);

struct Link {
  Span e;
  Span f;

  Link() = default;
  Link(Span es, Span fs) : e(es), f(fs) {}
  auto operator<=>(const Link&) const = default;
};

std::string link_to_string(const Link& l);

// Sparse link-weight function: absent pairs weigh 0.
class WeightFn {
 public:
  void set(const Link& link, const Weight& w);
  Weight operator()(const Link& link) const;
  Weight operator()(const Span& e, const Span& f) const {
    return (*this)(Link(e, f));
  }

  // true iff every stored weight is 0 or 1 (kept consistent by set()).
  bool is_zero_one() const { return nontrivial_count_ == 0; }
  const std::map<Link, Weight>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Link, Weight> entries_;
  std::size_t nontrivial_count_ = 0;  // stored weights not in {0,1}
};

struct WsaInstance {
  Sentence e;
  Sentence f;
  WeightFn phi;
};

// A set of phrase links; valid alignments cover every word of both sentences
// exactly once.  Links are kept sorted by (e-span, f-span) for determinism.
struct Alignment {
  std::vector<Link> links;

  void normalize();
  bool operator==(const Alignment&) const = default;
};

struct ValidityReport {
  bool valid = true;
  std::string message;  // first violation, empty when valid
};

ValidityReport check_alignment(const WsaInstance& inst, const Alignment& a);
bool is_valid_alignment(const WsaInstance& inst, const Alignment& a);

// Product of link weights; the empty alignment has weight 1.
// Throws std::invalid_argument (with the first violation) on invalid input.
Weight alignment_weight(const WsaInstance& inst, const Alignment& a);

// Appends ceil(|e|/2) null words to f and extends phi: every (e-span,
// all-null f-span) pair weighs 1; spans mixing null and real words keep the
// default weight 0.  Requires |f| < |e|.
WsaInstance pad_to_bijective(const Sentence& e, const Sentence& f,
                             const WeightFn& phi);

inline constexpr int kDefaultPartitionGuard = 20;
inline constexpr const char* kGuardEnvVar = "ALIGNH_GUARD";

// Effective guard: ALIGNH_GUARD env var overrides the default; explicit
// values passed by callers override both.
int partition_guard_from_env();

// Boundary bitstrings: bit p (1-based interior position p, leftmost char
// first) is '1' iff the partition breaks between words p and p+1.
std::string boundary_bits(const std::vector<Span>& spans, int n);
std::vector<Span> spans_from_bits(const std::string& bits);

// Streams all partitions of n words into ordered spans, lexicographically by
// boundary bitstring; stops early when the callback returns false.  With
// `exactly` set, only partitions with that many phrases are produced.
// Throws on n > guard ("size-guard" error).
void for_each_partition(int n, std::optional<int> exactly, int guard,
                        const std::function<bool(const std::vector<Span>&)>& fn);

std::vector<std::vector<Span>> enumerate_partitions(
    int n, std::optional<int> exactly = std::nullopt,
    int guard = kDefaultPartitionGuard);

}  // namespace alignh
