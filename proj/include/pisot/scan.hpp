#pragma once

// Batch scanner over (x, y) ranges: one decision per pair, CSV output
// keyed by y mod x^2 (the residue classes the recurrence families cluster
// by). Pairs run on a worker pool; completed rows go to an append-only
// journal so an interrupted scan resumes without recompute.

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pisot/decision.hpp"
#include "pisot/serialize.hpp"

namespace pisot {

struct ScanRecord {
    Int x;
    Int y;
    Rat r;
    Int y_mod_x2;
    Verdict verdict = Verdict::Inconclusive;
    unsigned order = 0;                 // 0 when no recurrence was found
    std::vector<Int> coefficients;
    Rat second_modulus_lo{0};
    Rat second_modulus_hi{0};
    long first_failure = -1;
    long n0 = -1;
};

inline std::string scan_csv_header() {
    return "x,y,r,y_mod_x2,verdict,order,coefficients,second_modulus_lo,second_modulus_hi,"
           "first_failure,n0";
}

inline std::string scan_record_csv(const ScanRecord& rec) {
    std::ostringstream os;
    os << rec.x.get_str() << "," << rec.y.get_str() << "," << rat_string(rec.r) << ","
       << rec.y_mod_x2.get_str() << "," << to_string(rec.verdict) << "," << rec.order << ",\"";
    for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
        if (i) os << ";";
        os << rec.coefficients[i].get_str();
    }
    os << "\"," << rat_string(rec.second_modulus_lo) << "," << rat_string(rec.second_modulus_hi)
       << ",";
    if (rec.first_failure >= 0) os << rec.first_failure;
    os << ",";
    if (rec.n0 >= 0) os << rec.n0;
    return os.str();
}

struct ScanOptions {
    unsigned max_order = 12;
    long check_limit = 50000;
    unsigned workers = 0;  // 0 = hardware concurrency
};

namespace detail {

inline ScanRecord scan_one(const Int& x, const Int& y, const Rat& r, const ScanOptions& opts) {
    ScanRecord rec;
    rec.x = x;
    rec.y = y;
    rec.r = r;
    Int x2 = x * x;
    mpz_mod(rec.y_mod_x2.get_mpz_t(), y.get_mpz_t(), x2.get_mpz_t());

    PisotParams params;
    params.x = x;
    params.y = y;
    params.r = r;
    DecisionReport rep = end_to_end(params, opts.max_order, opts.check_limit);
    rec.verdict = rep.verdict;
    if (rep.recurrence) {
        rec.order = rep.recurrence->order_k;
        rec.coefficients = rep.recurrence->coefficients;
    }
    rec.second_modulus_lo = rep.spectrum.second_modulus_lower;
    rec.second_modulus_hi = rep.spectrum.second_modulus_upper;
    rec.first_failure = rep.first_failure;
    rec.n0 = rep.n0;
    return rec;
}

}  // namespace detail

// Scan [x_lo..x_hi] x [y_lo..y_hi] (only pairs with x < y), write a CSV in
// deterministic (x, y) order. The journal at output_path + ".journal" holds
// one finished row per line keyed "x y"; rows already journaled are reused.
// Returns the number of rows written.
inline std::size_t scan(long x_lo, long x_hi, long y_lo, long y_hi, const Rat& r,
                        const std::string& output_path, const ScanOptions& opts = {}) {
    std::vector<std::pair<long, long>> pairs;
    for (long x = x_lo; x <= x_hi; ++x)
        for (long y = y_lo; y <= y_hi; ++y)
            if (0 < x && x < y) pairs.emplace_back(x, y);

    const std::string journal_path = output_path + ".journal";
    std::map<std::pair<long, long>, std::string> done;
    {
        std::ifstream jin(journal_path);
        std::string line;
        while (std::getline(jin, line)) {
            std::istringstream ls(line);
            long x, y;
            char sep;
            if (!(ls >> x >> y >> sep) || sep != '|') continue;
            std::string row;
            std::getline(ls, row);
            done[{x, y}] = row;
        }
    }

    std::vector<std::pair<long, long>> todo;
    for (const auto& p : pairs)
        if (!done.count(p)) todo.push_back(p);

    std::mutex mu;
    std::ofstream journal(journal_path, std::ios::app);
    std::size_t next = 0;
    unsigned n_workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min<unsigned>(n_workers, std::max<std::size_t>(todo.size(), 1));

    auto worker = [&]() {
        for (;;) {
            std::pair<long, long> job;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= todo.size()) return;
                job = todo[next++];
            }
            ScanRecord rec;
            try {
                rec = detail::scan_one(Int(job.first), Int(job.second), r, opts);
            } catch (const std::exception&) {
                rec.x = job.first;
                rec.y = job.second;
                rec.r = r;
                Int x2 = rec.x * rec.x;
                mpz_mod(rec.y_mod_x2.get_mpz_t(), rec.y.get_mpz_t(), x2.get_mpz_t());
            }
            std::string row = scan_record_csv(rec);
            {
                std::lock_guard<std::mutex> lock(mu);
                done[job] = row;
                journal << job.first << " " << job.second << " |" << row << "\n";
                journal.flush();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    std::ofstream out(output_path, std::ios::trunc);
    out << scan_csv_header() << "\n";
    for (const auto& p : pairs) out << done.at(p) << "\n";
    return pairs.size();
}

}  // namespace pisot
