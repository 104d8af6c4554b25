#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "s3real/realize.hpp"

namespace s3real {

SweepReport sweep(int n, const RealizeOptions& opts, unsigned threads) {
  const auto seqs = graphic_sequences(n, 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SweepReport total;
  total.n = n;
  total.graphic = static_cast<long long>(seqs.size());
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<std::pair<std::size_t, std::string>> failures;

  auto worker = [&] {
    SweepReport local;
    std::vector<std::pair<std::size_t, std::string>> local_fail;
    for (std::size_t i = next++; i < seqs.size(); i = next++) {
      const DegreeSequence& seq = seqs[i];
      const bool qualifies = seq.min() >= 4 && seq.sum() >= 6LL * n - 4;
      try {
        RealizeOutcome out = realize(seq, opts);
        if (!qualifies) {
          if (out.accepted())
            local_fail.emplace_back(i, seq.to_string() + ": accepted but violates the conditions");
          else
            ++local.rejected;
          continue;
        }
        ++local.qualifying;
        if (!out.accepted()) {
          local_fail.emplace_back(i, seq.to_string() + ": rejected (" + out.rejection + ")");
          continue;
        }
        const RealizationResult& r = *out.result;
        if (!is_simple(r.graph) || degree_sequence(r.graph) != seq) {
          local_fail.emplace_back(i, seq.to_string() + ": wrong graph");
          continue;
        }
        VerifyOptions vo;
        vo.oracle.edge_cap = opts.oracle_cap;
        vo.oracle.threads = 1;
        Verdict v = verify(r.graph, r.certificate, vo);
        if (!v) {
          local_fail.emplace_back(i, seq.to_string() + ": certificate rejected at " + v.locus + ": " +
                                         v.reason);
          continue;
        }
        ++local.realized;
        for (const auto& l : r.trace) ++local.labels[l];
      } catch (const std::exception& e) {
        if (qualifies) ++local.qualifying;
        local_fail.emplace_back(i, seq.to_string() + ": " + e.what());
      }
    }
    std::lock_guard lock(merge);
    total.qualifying += local.qualifying;
    total.realized += local.realized;
    total.rejected += local.rejected;
    for (const auto& [k, c] : local.labels) total.labels[k] += c;
    failures.insert(failures.end(), local_fail.begin(), local_fail.end());
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(failures.begin(), failures.end());
  for (auto& f : failures) total.failures.push_back(std::move(f.second));
  return total;
}

}  // namespace s3real
