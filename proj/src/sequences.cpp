#include "s3real/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace s3real {

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

int parse_int(std::string_view tok, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw precondition_error("malformed token '" + std::string(tok) + "' in '" +
                             std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : degrees_(sorted_desc(std::move(degrees))) {
  if (!degrees_.empty() && degrees_.back() < 0) {
    throw precondition_error("degree sequence entries must be non-negative");
  }
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees)) {}

long long DegreeSequence::sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    if (i != 0) out += ',';
    out += std::to_string(degrees_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

DegreeSequence parse_sequence(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  std::string_view body = compact;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw precondition_error("empty degree sequence");

  std::vector<int> degrees;
  while (true) {
    auto comma = body.find(',');
    std::string_view term = body.substr(0, comma);
    auto caret = term.find('^');
    int value = parse_int(term.substr(0, caret), text);
    int count = 1;
    if (caret != std::string_view::npos) {
      count = parse_int(term.substr(caret + 1), text);
      if (count <= 0) {
        throw precondition_error("exponent must be positive in '" + std::string(term) + "'");
      }
    }
    if (value < 0) throw precondition_error("negative degree in '" + std::string(text) + "'");
    degrees.insert(degrees.end(), static_cast<std::size_t>(count), value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return DegreeSequence(std::move(degrees));
}

bool is_graphic(const DegreeSequence& seq) {
  const auto& d = seq.values();
  const long long n = static_cast<long long>(d.size());
  if (n == 0) return false;
  if (seq.sum() % 2 != 0) return false;
  if (d.front() > n - 1) return false;

  long long f = 0;
  for (long long i = 1; i <= n; ++i) {
    if (d[i - 1] >= i) f = i;
  }
  long long prefix = 0;
  for (long long k = 1; k <= f; ++k) {
    prefix += d[k - 1];
    long long rhs = k * (k - 1);
    for (long long i = k; i < n; ++i) rhs += std::min<long long>(k, d[i]);
    if (prefix > rhs) return false;
  }
  return true;
}

namespace {

// Drops d_n and decrements the `take` largest of the remaining entries.
DegreeSequence drop_last_and_decrement(const DegreeSequence& seq, int take) {
  std::vector<int> rest(seq.values().begin(), seq.values().end() - 1);
  for (int i = 0; i < take; ++i) rest[static_cast<std::size_t>(i)] -= 1;
  return DegreeSequence(std::move(rest));
}

}  // namespace

DegreeSequence laying_sequence(const DegreeSequence& seq) {
  const auto n = static_cast<int>(seq.size());
  if (n < 2) throw precondition_error("laying sequence needs n >= 2");
  const int dn = seq.min();
  if (dn < 1) throw precondition_error("laying sequence needs d_n >= 1");
  if (dn > n - 1) throw precondition_error("laying sequence needs d_n <= n - 1");
  return drop_last_and_decrement(seq, dn);
}

DegreeSequence lifting_sequence(const DegreeSequence& seq) {
  const auto n = static_cast<int>(seq.size());
  if (n < 2) throw precondition_error("lifting sequence needs n >= 2");
  const int dn = seq.min();
  if (dn < 2) throw precondition_error("lifting sequence needs d_n >= 2");
  if (dn - 2 > n - 1) throw precondition_error("lifting sequence needs d_n - 2 <= n - 1");
  return drop_last_and_decrement(seq, dn - 2);
}

DegreeSequence minus2_sequence(const DegreeSequence& seq) {
  if (seq.empty() || seq.min() < 2) throw precondition_error("minus-2 sequence needs d_n >= 2");
  std::vector<int> out = seq.values();
  for (int& x : out) x -= 2;
  return DegreeSequence(std::move(out));
}

DegreeSequence complement_sequence(const DegreeSequence& seq) {
  const auto n = static_cast<int>(seq.size());
  if (n == 0 || seq.max() > n - 1) {
    throw precondition_error("complement sequence needs d_1 <= n - 1");
  }
  std::vector<int> out;
  out.reserve(seq.size());
  for (int x : seq.values()) out.push_back(n - 1 - x);
  return DegreeSequence(std::move(out));
}

GapVerdict is_graphic_small_gap(const DegreeSequence& seq) {
  const long long n = static_cast<long long>(seq.size());
  if (n == 0 || seq.min() <= 0) throw precondition_error("small-gap test needs d_n > 0");
  // d_1 > n - 1 can never satisfy the bound, so it is reported as inconclusive.
  if (seq.max() > n - 1) return GapVerdict::inconclusive;
  if (seq.sum() % 2 != 0) throw precondition_error("small-gap test needs an even sum");
  const long long top = seq.max() + seq.min() + 1;
  // n >= floor(top^2/4) / d_n, cleared of the division.
  return n * seq.min() >= (top * top) / 4 ? GapVerdict::graphic : GapVerdict::inconclusive;
}

bool in_z3_exceptions(const DegreeSequence& seq) {
  const auto& d = seq.values();
  const int n = static_cast<int>(d.size());
  if (n < 5) return false;

  // S1(n): ((n-1)^2, 3^{n-k-2}, 2^k), 0 <= k <= n-4, k = n mod 2.
  for (int k = n % 2; k <= n - 4; k += 2) {
    std::vector<int> cand{n - 1, n - 1};
    cand.insert(cand.end(), static_cast<std::size_t>(n - k - 2), 3);
    cand.insert(cand.end(), static_cast<std::size_t>(k), 2);
    if (cand == d) return true;
  }

  // S2(n): (d1, d2, d3, d4, 2^{n-4}) with n-1 >= d1 >= ... >= d4 >= 3, d1+..+d4 = 2n+4.
  if (d[0] <= n - 1 && d[3] >= 3 && d[0] + d[1] + d[2] + d[3] == 2 * n + 4 &&
      std::all_of(d.begin() + 4, d.end(), [](int x) { return x == 2; })) {
    return true;
  }

  if (n % 2 == 0) {
    std::vector<int> wheel(static_cast<std::size_t>(n), 3);
    wheel[0] = n - 1;
    if (wheel == d) return true;
  }
  return false;
}

bool is_z3_realizable(const DegreeSequence& seq) {
  const auto n = static_cast<long long>(seq.size());
  if (n < 5) throw precondition_error("Z3 realizability needs n >= 5");
  if (seq.min() < 2) throw precondition_error("Z3 realizability needs d_n >= 2");
  if (!is_graphic(seq)) throw precondition_error("Z3 realizability needs a graphic sequence");
  return seq.sum() >= 4 * n - 4 && !in_z3_exceptions(seq);
}

bool is_s3_realizable(const DegreeSequence& seq) {
  if (seq.empty() || seq.min() <= 0) throw precondition_error("S3 realizability needs d_n > 0");
  if (!is_graphic(seq)) throw precondition_error("sequence " + seq.to_string() + " is not graphic");
  const auto n = static_cast<long long>(seq.size());
  return seq.sum() >= 6 * n - 4 && seq.min() >= 4;
}

std::vector<DegreeSequence> graphic_sequences(int n, int min_entry) {
  if (n < 1) throw precondition_error("graphic_sequences needs n >= 1");
  std::vector<DegreeSequence> out;
  std::vector<int> cur;
  std::function<void(int, int, long long)> rec = [&](int left, int cap, long long sum) {
    if (left == 0) {
      DegreeSequence s(cur);
      if (sum % 2 == 0 && is_graphic(s)) out.push_back(std::move(s));
      return;
    }
    for (int v = cap; v >= std::max(min_entry, 0); --v) {
      cur.push_back(v);
      rec(left - 1, v, sum + v);
      cur.pop_back();
    }
  };
  rec(n, n - 1, 0);
  return out;
}

}  // namespace s3real
