#pragma once

#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "counting.hpp"

namespace vnclass {

/// Wall-clock timing of one exact V_n evaluation.
struct BenchRecord {
    unsigned n = 0;
    double t_total_s = 0;
    double t_cycle_index_s = 0; ///< partitions and induced cycle indices only
    std::string mode = "exact";
};

/// Exact V_1 .. V_max_n in turn; on_row sees each record as it completes.
inline std::vector<BenchRecord> run_bench(unsigned max_n, const VnOptions& opts = {},
                                          const std::function<void(const BenchRecord&)>& on_row = {})
{
    if (max_n < 1 || max_n > kMaxVariables)
        throw invalid_argument("bench: max n must be in [1, " + std::to_string(kMaxVariables) + "]");
    std::vector<BenchRecord> out;
    for (unsigned n = 1; n <= max_n; ++n) {
        VnResult r = v_n(n, opts);
        out.push_back({n, r.elapsed_total, r.elapsed_cycle_index, "exact"});
        if (on_row)
            on_row(out.back());
    }
    return out;
}

/// CSV with header `n,t_total_s,t_cycle_index_s`, microsecond resolution.
inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records)
{
    os << "n,t_total_s,t_cycle_index_s\n";
    char buf[96];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%u,%.6f,%.6f\n", r.n, r.t_total_s, r.t_cycle_index_s);
        os << buf;
    }
}

} // namespace vnclass
