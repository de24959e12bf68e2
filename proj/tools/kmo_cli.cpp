/**
 * kmo: command-line front end.
 *
 *   kmo seq     CSV table of M_{k,n} and m_{k,n}
 *   kmo oct     octonion sequence terms and their squared norms
 *   kmo verify  run the identity grid and emit a report
 *   kmo bench   time the recurrence against the companion-matrix evaluator
 *
 * Exit codes: 0 ok, 1 an identity check FAILed, 2 usage error,
 * 3 I/O error, 4 internal cross-check mismatch.
 */

#include <kmo/kmo.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kIo = 3,
    kMismatch = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "a..b" or "a"; both ends inclusive.
kmo::Range parse_range(const std::string& text, std::string_view what)
{
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw UsageError("invalid " + std::string(what) + " range '" + text + "'");
        }
        return v;
    };
    kmo::Range r;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        r = {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    } else {
        r.lo = r.hi = to_int(text);
    }
    if (r.lo > r.hi) {
        throw UsageError("empty " + std::string(what) + " range '" + text + "'");
    }
    return r;
}

kmo::Range k_range(const std::string& text)
{
    const auto r = parse_range(text, "k");
    if (r.lo < 1) {
        throw UsageError("k must be >= 1");
    }
    return r;
}

kmo::Range n_range(const std::string& text)
{
    const auto r = parse_range(text, "n");
    if (r.lo < 0) {
        throw UsageError("n must be >= 0");
    }
    return r;
}

/// Writes to the named file, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        if (!std::cout) {
            throw IoError("failed writing to standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

/// Hardware concurrency, capped by KMO_THREADS when set.
unsigned thread_budget(unsigned requested)
{
    unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KMO_THREADS"); env != nullptr && *env != '\0') {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        } catch (const std::exception&) {
            throw UsageError(std::string("KMO_THREADS must be a positive integer, got '") + env + "'");
        }
    }
    return n;
}

// ---------------------------------------------------------------------------

struct SeqOptions {
    std::string k = "1";
    std::string n = "0..10";
    std::string format = "csv";
    std::string output;
};

int cmd_seq(const SeqOptions& o)
{
    const auto ks = k_range(o.k);
    const auto ns = n_range(o.n);
    std::ostringstream os;
    if (o.format == "csv") {
        os << "k,n,M,m\n";
    }
    for (std::int64_t k = ks.lo; k <= ks.hi; ++k) {
        const auto count = static_cast<std::size_t>(ns.hi - ns.lo + 1);
        const auto big_m = kmo::seq_window({kmo::SeqKind::Mersenne, k}, static_cast<std::uint64_t>(ns.lo), count);
        const auto small_m = kmo::seq_window({kmo::SeqKind::MersenneLucas, k}, static_cast<std::uint64_t>(ns.lo), count);
        for (std::size_t t = 0; t < count; ++t) {
            const auto n = ns.lo + static_cast<std::int64_t>(t);
            if (o.format == "csv") {
                os << k << ',' << n << ',' << big_m[t].get_str() << ',' << small_m[t].get_str() << '\n';
            } else {
                os << "M_{" << k << ',' << n << "} = " << big_m[t].get_str() << "    m_{" << k << ',' << n
                   << "} = " << small_m[t].get_str() << '\n';
            }
        }
    }
    emit(o.output, os.str());
    return kOk;
}

// ---------------------------------------------------------------------------

struct OctOptions {
    std::string family = "both";
    std::string k = "1";
    std::string n = "0..3";
    std::string route = "definition";
    std::string format = "csv";
    std::string output;
};

std::vector<kmo::OctKind> families_from(const std::string& family)
{
    if (family == "both") {
        return {kmo::OctKind::MO, kmo::OctKind::MLO};
    }
    if (auto f = kmo::parse_family(family)) {
        return {*f};
    }
    throw UsageError("unknown family '" + family + "' (expected MO, MLO or both)");
}

int cmd_oct(const OctOptions& o)
{
    const auto ks = k_range(o.k);
    const auto ns = n_range(o.n);
    const auto families = families_from(o.family);
    std::ostringstream os;
    nlohmann::json doc = nlohmann::json::array();
    if (o.format == "csv") {
        os << "family,k,n,e0,e1,e2,e3,e4,e5,e6,e7,norm_sq\n";
    }
    for (const auto family : families) {
        for (std::int64_t k = ks.lo; k <= ks.hi; ++k) {
            for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
                const kmo::OctSeqParams p{family, k};
                const auto un = static_cast<std::uint64_t>(n);
                const auto value = o.route == "closed" ? kmo::oct_seq_closed(p, un) : kmo::oct_seq(p, un);
                const auto nsq = kmo::norm_sq(value);
                if (o.format == "csv") {
                    os << kmo::to_string(family) << ',' << k << ',' << n;
                    for (const auto& c : value.coords()) {
                        os << ',' << c;
                    }
                    os << ',' << nsq << '\n';
                } else if (o.format == "json") {
                    doc.push_back({{"family", std::string(kmo::to_string(family))},
                                   {"k", k},
                                   {"n", n},
                                   {"coords", kmo::octonion_json(value)},
                                   {"norm_sq", nsq.to_string()}});
                } else {
                    os << kmo::to_string(family) << "_{" << k << ',' << n << "} = " << value << "    N^2 = " << nsq
                       << '\n';
                }
            }
        }
    }
    emit(o.output, o.format == "json" ? doc.dump(2) + "\n" : os.str());
    return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::optional<std::string> k;
    std::optional<std::string> n;
    std::optional<std::int64_t> r_max;
    std::optional<std::int64_t> ij_max;
    std::optional<std::int64_t> order;
    std::vector<std::string> identities;
    std::string family = "both";
    std::string form = "both";
    bool unbounded_r = false;
    std::string format = "json";
    std::string output;
    bool corrupt_table = false;
    unsigned threads = 0;
};

kmo::GridConfig build_grid(const VerifyOptions& o)
{
    if (o.form != "general" && o.form != "k1" && o.form != "both") {
        throw UsageError("unknown form '" + o.form + "' (expected general, k1 or both)");
    }
    if (o.format != "json" && o.format != "plain") {
        throw UsageError("unknown format '" + o.format + "' (expected json or plain)");
    }
    std::vector<kmo::IdentityName> names;
    for (const auto& text : o.identities) {
        const auto name = kmo::parse_identity_name(text);
        if (!name) {
            throw UsageError("unknown identity '" + text + "'");
        }
        names.push_back(*name);
    }
    if (names.empty()) {
        names.assign(kmo::kAllIdentities.begin(), kmo::kAllIdentities.end());
    }

    const auto families = families_from(o.family);
    const auto ks = o.k ? k_range(*o.k) : kmo::Range{1, 5};
    kmo::GridConfig config;
    config.corrupt_lhs_table = o.corrupt_table;
    for (const auto name : names) {
        for (const auto st : {kmo::Statement::General, kmo::Statement::KEqualsOne}) {
            const bool k1 = st == kmo::Statement::KEqualsOne;
            if ((k1 && o.form == "general") || (!k1 && o.form == "k1")) {
                continue;
            }
            if (k1 && ks.lo > 1) {
                continue;
            }
            kmo::GridEntry e{name};
            e.families = families;
            e.statement = st;
            e.k = k1 ? kmo::Range{1, 1} : ks;
            if (name == kmo::IdentityName::CassiniLR || name == kmo::IdentityName::CassiniRL) {
                e.n.lo = 1;
            }
            if (o.n) {
                e.n = n_range(*o.n);
            }
            if (o.r_max) {
                e.r = {0, *o.r_max};
            } else {
                e.r = {0, e.n.hi};
            }
            e.r_bounded_by_n = !o.unbounded_r;
            if (o.ij_max) {
                e.i = e.j = {0, *o.ij_max};
            }
            if (o.order) {
                e.order = *o.order;
            }
            config.entries.push_back(std::move(e));
        }
    }
    if (config.entries.empty()) {
        throw UsageError("nothing to verify: the k=1 form needs a k range that includes 1");
    }
    return config;
}

int cmd_verify(const VerifyOptions& o)
{
    kmo::GridConfig config;
    try {
        config = build_grid(o);
        kmo::validate(config);
    } catch (const kmo::ConfigError& e) {
        throw UsageError(e.what());
    }
    const auto report = kmo::run_grid(config, {thread_budget(o.threads)});
    emit(o.output, o.format == "json" ? kmo::to_json_string(report) : kmo::summary_table(report));
    if (!o.output.empty() && o.output != "-") {
        std::cerr << kmo::summary_table(report);
    }
    return report.has_failures() ? kVerificationFailed : kOk;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
    std::int64_t k = 2;
    std::vector<std::int64_t> n{0, 100, 1000, 10000};
    std::string family = "M";
    int repeat = 3;
    std::string output;
    bool corrupt_fast = false;
};

int cmd_bench(const BenchOptions& o)
{
    if (o.k < 1) {
        throw UsageError("k must be >= 1");
    }
    if (o.repeat < 1) {
        throw UsageError("repeat must be >= 1");
    }
    if (o.family != "M" && o.family != "m") {
        throw UsageError("unknown family '" + o.family + "' (expected M or m)");
    }
    const kmo::SeqParams p{o.family == "M" ? kmo::SeqKind::Mersenne : kmo::SeqKind::MersenneLucas, o.k};
    std::ostringstream os;
    os << "n,method,nanoseconds,digits\n";
    using Clock = std::chrono::steady_clock;
    for (const auto n : o.n) {
        if (n < 0) {
            throw UsageError("n must be >= 0");
        }
        const auto un = static_cast<std::uint64_t>(n);
        auto time = [&](auto&& f, kmo::BigInt& value) {
            auto best = Clock::duration::max();
            for (int t = 0; t < o.repeat; ++t) {
                const auto start = Clock::now();
                value = f();
                best = std::min(best, Clock::now() - start);
            }
            return std::chrono::duration_cast<std::chrono::nanoseconds>(best).count();
        };
        kmo::BigInt naive;
        kmo::BigInt fast;
        const auto naive_ns = time([&]() -> kmo::BigInt { return kmo::seq_value(p, un); }, naive);
        const auto fast_ns = time([&]() -> kmo::BigInt { return kmo::seq_fast(p, un) + (o.corrupt_fast ? 1 : 0); }, fast);
        if (naive != fast) {
            std::cerr << "kmo bench: evaluators disagree at n=" << n << '\n';
            return kMismatch;
        }
        const auto digits = naive.get_str().size() - (naive < 0 ? 1 : 0);
        os << n << ",naive," << naive_ns << ',' << digits << '\n';
        os << n << ",fast," << fast_ns << ',' << digits << '\n';
    }
    emit(o.output, os.str());
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"k-Mersenne and k-Mersenne-Lucas octonions: sequences, closed forms and identity verification"};
    app.require_subcommand(1);

    SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "CSV table of M_{k,n} and m_{k,n}");
    seq_cmd->add_option("-k,--k", seq.k, "k or k range (a..b)")->capture_default_str();
    seq_cmd->add_option("-n,--n", seq.n, "n or n range (a..b)")->capture_default_str();
    seq_cmd->add_option("--format", seq.format)->check(CLI::IsMember({"csv", "plain"}))->capture_default_str();
    seq_cmd->add_option("-o,--output", seq.output, "output file (default stdout)");

    OctOptions oct;
    auto* oct_cmd = app.add_subcommand("oct", "octonion sequence terms and squared norms");
    oct_cmd->add_option("--family", oct.family, "MO, MLO or both")->capture_default_str();
    oct_cmd->add_option("-k,--k", oct.k, "k or k range (a..b)")->capture_default_str();
    oct_cmd->add_option("-n,--n", oct.n, "n or n range (a..b)")->capture_default_str();
    oct_cmd->add_option("--route", oct.route, "definition (recurrence) or closed (alpha/beta form)")
        ->check(CLI::IsMember({"definition", "closed"}))
        ->capture_default_str();
    oct_cmd->add_option("--format", oct.format)->check(CLI::IsMember({"csv", "plain", "json"}))->capture_default_str();
    oct_cmd->add_option("-o,--output", oct.output, "output file (default stdout)");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "verify closed forms and identities; exit 1 on any FAIL");
    ver_cmd->add_option("-k,--k", ver.k, "k range for general statements (default 1..5)");
    ver_cmd->add_option("-n,--n", ver.n, "n range (default 0..24, cassini 1..24)");
    ver_cmd->add_option("--r-max", ver.r_max, "largest shift r (default: n max)");
    ver_cmd->add_option("--ij-max", ver.ij_max, "largest Vajda offsets i, j (default 8)");
    ver_cmd->add_option("--order", ver.order, "generating-function truncation order (default 32)");
    ver_cmd->add_option("--identity", ver.identities, "identity to check (repeatable; default all)");
    ver_cmd->add_option("--family", ver.family, "MO, MLO or both")->capture_default_str();
    ver_cmd->add_option("--form", ver.form, "general, k1 or both")->capture_default_str();
    ver_cmd->add_flag("--unbounded-r", ver.unbounded_r, "do not clamp r to n (r > n becomes an input error)");
    ver_cmd->add_option("--format", ver.format, "json or plain")->capture_default_str();
    ver_cmd->add_option("-o,--output", ver.output, "output file (default stdout)");
    ver_cmd->add_option("--threads", ver.threads, "worker threads (0 = all cores; capped by KMO_THREADS)");
    ver_cmd->add_flag("--corrupt-table", ver.corrupt_table, "test hook: corrupt the table used for left-hand sides")
        ->group("");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "time recurrence vs companion-matrix evaluation");
    bench_cmd->add_option("-k,--k", bench.k)->capture_default_str();
    bench_cmd->add_option("-n,--n", bench.n, "n values")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--family", bench.family, "M or m")->capture_default_str();
    bench_cmd->add_option("--repeat", bench.repeat, "timing repetitions (best is reported)")->capture_default_str();
    bench_cmd->add_option("-o,--output", bench.output, "output file (default stdout)");
    bench_cmd->add_flag("--corrupt-fast", bench.corrupt_fast, "test hook: perturb the fast evaluator")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*seq_cmd) {
            return cmd_seq(seq);
        }
        if (*oct_cmd) {
            return cmd_oct(oct);
        }
        if (*ver_cmd) {
            return cmd_verify(ver);
        }
        if (*bench_cmd) {
            return cmd_bench(bench);
        }
    } catch (const UsageError& e) {
        std::cerr << "kmo: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "kmo: " << e.what() << '\n';
        return kIo;
    } catch (const kmo::InternalInconsistency& e) {
        std::cerr << "kmo: internal inconsistency: " << e.what() << '\n';
        return kMismatch;
    } catch (const kmo::InvalidArgument& e) {
        std::cerr << "kmo: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
