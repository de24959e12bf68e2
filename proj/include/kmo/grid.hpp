#pragma once

/**
 * @file grid.hpp
 * @brief Cartesian-grid evaluation of identity checks into a VerificationReport.
 *
 * Grid points are independent and may run on several threads; results are
 * sorted by (identity, params) before they are returned, so the report does
 * not depend on evaluation order.
 */

#include "kmo/errors.hpp"
#include "kmo/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace kmo {

inline constexpr std::string_view kToolName = "kmo";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Inclusive integer range.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct GridEntry {
    IdentityName name;
    std::vector<OctKind> families{OctKind::MO, OctKind::MLO};
    Statement statement = Statement::General;
    Range k{1, 5};
    Range n{0, 24};
    /// Shift range for Catalan and d'Ocagne.
    Range r{0, 24};
    /// Catalan and d'Ocagne: clamp r to [r.lo, min(r.hi, n)]. When false, all
    /// of r is used, and Catalan points with r > n become input errors.
    bool r_bounded_by_n = true;
    Range i{0, 8};
    Range j{0, 8};
    /// Generating-function truncation order.
    std::int64_t order = 32;
};

struct GridConfig {
    std::vector<GridEntry> entries;
    /// Test hook: multiply left-hand sides with corrupted_table().
    bool corrupt_lhs_table = false;
};

struct RunOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct InputError {
    IdentityId identity;
    Params params;
    std::string message;
};

struct Discrepancy {
    std::string id;
    std::string description;
};

struct StatusCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct VerificationReport {
    std::string tool{kToolName};
    std::string version{kToolVersion};
    std::vector<CheckResult> results;
    std::vector<InputError> input_errors;
    StatusCounts counts;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> notes;

    [[nodiscard]] bool has_failures() const noexcept { return counts.fail != 0; }
};

/// Raised for malformed grid configurations, before anything is evaluated.
class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

inline StatusCounts tally(const std::vector<CheckResult>& results)
{
    StatusCounts c;
    for (const auto& r : results) {
        switch (r.status) {
        case Status::Pass: ++c.pass; break;
        case Status::Fail: ++c.fail; break;
        case Status::Skipped: ++c.skipped; break;
        }
    }
    return c;
}

/// Known disagreements between commonly stated forms of these identities and
/// what actually holds; attached to every report.
inline std::vector<Discrepancy> known_discrepancies()
{
    return {
        {"conjugate_real_part",
         "The displayed conjugates of MO_{k,n} and mO_{k,n} give the real part as M_{k,0} and m_{k,0}. "
         "The general conjugate a_0 - sum a_r e_r gives M_{k,n} and m_{k,n}; that is what is implemented."},
        {"genfunc_ordinary_mo_denominator",
         "The stated ordinary generating function of MO_{k,n} has denominator 1-3x+2x^2, while its derivation "
         "ends with 1-3kx+2x^2. The series is verified with 1-3kx+2x^2; the stated form is only correct at k=1."},
        {"cassini_k1_mlo_factor",
         "The k=1 Cassini identities for Mersenne-Lucas octonions are stated as 2^n[2ab-ba] and 2^n[2ba-ab]. "
         "The general-k statement at k=1 and the k=1 Catalan identity at r=1 both give 2^(n-1)[...]. "
         "The 2^(n-1) form is verified; the stated form leaves a nonzero residual for every n >= 1."},
    };
}

inline std::vector<std::string> report_notes()
{
    return {
        "Exponential generating functions are certified formally by the binet checks: the coefficient of x^n/n! "
        "is by construction the closed form alpha*l1^n -/+ beta*l2^n (divided by l1-l2 for MO).",
        "Norms are verified as N^2, which stays in the scalar ring.",
    };
}

namespace detail {

inline void require_range(const Range& r, std::int64_t min_lo, std::string_view what)
{
    if (r.lo > r.hi) {
        throw ConfigError("grid: empty " + std::string(what) + " range [" + std::to_string(r.lo) + ", " +
                          std::to_string(r.hi) + "]");
    }
    if (r.lo < min_lo) {
        throw ConfigError("grid: " + std::string(what) + " range starts below " + std::to_string(min_lo));
    }
}

/// Largest sequence index a point of this entry can touch.
inline std::uint64_t required_index(const GridEntry& e)
{
    const auto n = static_cast<std::uint64_t>(e.n.hi);
    const auto r = static_cast<std::uint64_t>(e.r.hi);
    switch (e.name) {
    case IdentityName::CatalanLR:
    case IdentityName::CatalanRL: return n + r;
    case IdentityName::CassiniLR:
    case IdentityName::CassiniRL:
    case IdentityName::FiniteSum: return n + 1;
    case IdentityName::Docagne: return std::max(n, r) + 1;
    case IdentityName::Vajda: return n + static_cast<std::uint64_t>(e.i.hi + e.j.hi);
    case IdentityName::GenfuncOrdinary: return static_cast<std::uint64_t>(e.order);
    case IdentityName::NormClosed:
    case IdentityName::Binet: return n;
    }
    return n;
}

using Outcome = std::variant<CheckResult, InputError>;

struct Task {
    IdentityId id;
    Params params;
    std::function<CheckResult()> run;
};

} // namespace detail

inline void validate(const GridConfig& config)
{
    for (const auto& e : config.entries) {
        if (e.families.empty()) {
            throw ConfigError("grid: entry '" + std::string(to_string(e.name)) + "' selects no family");
        }
        detail::require_range(e.k, 1, "k");
        detail::require_range(e.n, 0, "n");
        detail::require_range(e.r, 0, "r");
        detail::require_range(e.i, 0, "i");
        detail::require_range(e.j, 0, "j");
        if (e.order < 2) {
            throw ConfigError("grid: generating-function order must be >= 2");
        }
        if (e.statement == Statement::KEqualsOne && (e.k.lo != 1 || e.k.hi != 1)) {
            throw ConfigError("grid: k=1 specialised entry '" + std::string(to_string(e.name)) + "' must use k range [1, 1]");
        }
    }
}

/// Every general and k = 1 statement over k ∈ [1, 5], n ≤ 24, r ≤ n, i, j ≤ 8.
inline GridConfig default_grid()
{
    GridConfig config;
    for (auto name : kAllIdentities) {
        GridEntry general{name};
        GridEntry special{name};
        special.statement = Statement::KEqualsOne;
        special.k = {1, 1};
        if (name == IdentityName::CassiniLR || name == IdentityName::CassiniRL) {
            general.n.lo = special.n.lo = 1;
        }
        config.entries.push_back(general);
        config.entries.push_back(special);
    }
    return config;
}

namespace detail {

inline std::vector<Task> plan(const GridConfig& config, const std::map<std::pair<OctKind, std::int64_t>, IdentityContext>& ctx)
{
    std::vector<Task> tasks;
    for (const auto& e : config.entries) {
        for (const auto family : e.families) {
            for (std::int64_t k = e.k.lo; k <= e.k.hi; ++k) {
                const IdentityContext* c = &ctx.at({family, k});
                const IdentityId id{family, e.name, e.statement == Statement::KEqualsOne};
                const Statement st = e.statement;
                auto add = [&](Params p, std::function<CheckResult()> f) {
                    p.emplace("k", k);
                    tasks.push_back({id, std::move(p), std::move(f)});
                };
                auto un = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
                switch (e.name) {
                case IdentityName::CatalanLR:
                case IdentityName::CatalanRL: {
                    const Ordering o = e.name == IdentityName::CatalanLR ? Ordering::LR : Ordering::RL;
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        const std::int64_t r_hi = e.r_bounded_by_n ? std::min(e.r.hi, n) : e.r.hi;
                        for (std::int64_t r = e.r.lo; r <= r_hi; ++r) {
                            add({{"n", n}, {"r", r}}, [=] { return check_catalan(*c, un(n), un(r), o, st); });
                        }
                    }
                    break;
                }
                case IdentityName::CassiniLR:
                case IdentityName::CassiniRL: {
                    const Ordering o = e.name == IdentityName::CassiniLR ? Ordering::LR : Ordering::RL;
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        add({{"n", n}}, [=] { return check_cassini(*c, un(n), o, st); });
                    }
                    break;
                }
                case IdentityName::Docagne:
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        const std::int64_t r_hi = e.r_bounded_by_n ? std::min(e.r.hi, n) : e.r.hi;
                        for (std::int64_t r = e.r.lo; r <= r_hi; ++r) {
                            add({{"n", n}, {"r", r}}, [=] { return check_docagne(*c, un(n), un(r), st); });
                        }
                    }
                    break;
                case IdentityName::Vajda:
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        for (std::int64_t i = e.i.lo; i <= e.i.hi; ++i) {
                            for (std::int64_t j = e.j.lo; j <= e.j.hi; ++j) {
                                add({{"n", n}, {"i", i}, {"j", j}}, [=] { return check_vajda(*c, un(n), un(i), un(j), st); });
                            }
                        }
                    }
                    break;
                case IdentityName::GenfuncOrdinary: {
                    const auto order = static_cast<std::size_t>(e.order);
                    add({{"N", e.order}}, [=] { return check_genfunc_ordinary(*c, order, st); });
                    break;
                }
                case IdentityName::FiniteSum:
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        add({{"n", n}}, [=] { return check_finite_sum(*c, un(n), st); });
                    }
                    break;
                case IdentityName::NormClosed:
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        add({{"n", n}}, [=] { return check_norm_closed(*c, un(n), st); });
                    }
                    break;
                case IdentityName::Binet:
                    for (std::int64_t n = e.n.lo; n <= e.n.hi; ++n) {
                        add({{"n", n}}, [=] { return check_binet(*c, un(n), st); });
                    }
                    break;
                }
            }
        }
    }
    return tasks;
}

template <class Key>
bool key_less(const Key& a, const Key& b)
{
    return std::tie(a.identity, a.params) < std::tie(b.identity, b.params);
}

} // namespace detail

/**
 * Evaluates every enabled point of the grid. Malformed configurations throw
 * ConfigError before any evaluation; points that violate a check's
 * precondition become InputError entries and the rest still run.
 */
inline VerificationReport run_grid(const GridConfig& config, const RunOptions& options = {})
{
    validate(config);

    const BasisTable lhs_table = config.corrupt_lhs_table ? corrupted_table() : kOctonionTable;
    std::map<std::pair<OctKind, std::int64_t>, std::uint64_t> need;
    for (const auto& e : config.entries) {
        for (const auto f : e.families) {
            for (std::int64_t k = e.k.lo; k <= e.k.hi; ++k) {
                auto& slot = need[{f, k}];
                slot = std::max(slot, detail::required_index(e));
            }
        }
    }
    std::map<std::pair<OctKind, std::int64_t>, IdentityContext> contexts;
    for (const auto& [key, max_index] : need) {
        contexts.emplace(key, IdentityContext(key.first, key.second, max_index, lhs_table));
    }

    auto tasks = detail::plan(config, contexts);
    std::vector<std::optional<detail::Outcome>> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            try {
                outcomes[t].emplace(tasks[t].run());
            } catch (const InvalidArgument& e) {
                outcomes[t].emplace(InputError{tasks[t].id, tasks[t].params, e.what()});
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    VerificationReport report;
    for (auto& o : outcomes) {
        if (auto* r = std::get_if<CheckResult>(&*o)) {
            report.results.push_back(std::move(*r));
        } else {
            report.input_errors.push_back(std::get<InputError>(std::move(*o)));
        }
    }
    std::sort(report.results.begin(), report.results.end(), detail::key_less<CheckResult>);
    std::sort(report.input_errors.begin(), report.input_errors.end(), detail::key_less<InputError>);
    report.counts = tally(report.results);
    if (!config.entries.empty()) {
        report.discrepancies = known_discrepancies();
        report.notes = report_notes();
    }
    return report;
}

} // namespace kmo
