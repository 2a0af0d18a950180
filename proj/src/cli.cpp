#include "udm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "udm/codec.hpp"
#include "udm/error.hpp"
#include "udm/family.hpp"
#include "udm/io.hpp"
#include "udm/transforms.hpp"

namespace udm::cli {

namespace {

// Raised for bad input files or flag combinations; maps to kUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

Family load_family(const std::string& path) {
    try {
        return parse_family(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

PatternMode parse_mode(const std::string& s) {
    return s == "atleast" || s == "at-least" ? PatternMode::at_least : PatternMode::exact;
}

BetaSequence betas_for(const Family& family) {
    if (!family.pascal_alpha()) {
        throw UsageError("the Newton decoder needs a Pascal family; this family carries no "
                         "'# pascal alpha=...' provenance line");
    }
    return BetaSequence::pascal(*family.field(), *family.pascal_alpha(), family.L());
}

InfoVector parse_info(const Family& family, const std::string& text) {
    const auto vals = parse_list(text);
    if (vals.size() != family.K()) {
        throw UsageError("information vector needs K = " + std::to_string(family.K()) + " entries");
    }
    InfoVector u;
    for (auto v : vals) u.push_back(family.field()->element(v));
    return u;
}

struct SimulationStats {
    std::size_t successes = 0;
    std::size_t wrong = 0;
    std::size_t singular = 0;
    double ops = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universally decodable matrices: construction, verification, coding"};
    app.require_subcommand(1);

    // construct
    std::size_t L = 0, N = 0, K = 0;
    std::uint64_t q = 0;
    std::optional<std::uint32_t> alpha;
    std::string variant = "pascal", out_path;
    auto* construct = app.add_subcommand("construct", "build a family and write it in family-file format");
    construct->add_option("--L", L, "number of channels");
    construct->add_option("--N", N, "rows per matrix");
    construct->add_option("--K", K, "information length");
    construct->add_option("--q", q, "field order")->required();
    construct->add_option("--alpha", alpha, "primitive element (default: smallest)");
    construct->add_option("--variant", variant, "pascal | monomial | qplus2")
        ->check(CLI::IsMember({"pascal", "monomial", "qplus2"}));
    construct->add_option("--out", out_path, "output file (default: stdout)");

    // verify
    std::string file, mode = "exact";
    unsigned jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "check the UDM condition on every erasure pattern");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--mode", mode, "exact | atleast")->check(CLI::IsMember({"exact", "atleast"}));
    verify_cmd->add_option("--jobs", jobs, "worker threads");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "largest L for which (L,N,K,q) families can exist");
    bounds->add_option("--N", N)->required();
    bounds->add_option("--K", K)->required();
    bounds->add_option("--q", q)->required();

    // transform
    std::string op, matrix_text, perm_text;
    std::size_t index = 0, power = 1;
    auto* transform = app.add_subcommand("transform", "apply a UDM-preserving transformation");
    transform->add_option("file", file)->required();
    transform->add_option("--op", op, "row | col | permute | tensor | pair-reversal | normalize | reduce")
        ->required()
        ->check(CLI::IsMember({"row", "col", "permute", "tensor", "pair-reversal", "normalize", "reduce"}));
    transform->add_option("--index", index, "matrix index for --op row");
    transform->add_option("--matrix", matrix_text, "matrix as 'a b c; d e f; ...'");
    transform->add_option("--perm", perm_text, "permutation as '1,0,3,2'");
    transform->add_option("--power", power, "tensor power m");
    transform->add_option("--out", out_path);

    // encode
    std::string family_path, u_text, pattern_text;
    bool taylor = false;
    auto* encode = app.add_subcommand("encode", "encode u and emit the (optionally erased) received word");
    encode->add_option("--family", family_path)->required();
    encode->add_option("--u", u_text, "information vector, K values")->required();
    encode->add_option("--pattern", pattern_text, "unerased prefix lengths (default: nothing erased)");
    encode->add_flag("--taylor", taylor, "encode via Taylor coefficients (Pascal families)");
    encode->add_option("--out", out_path);

    // decode
    std::string rx_path, decoder = "gaussian";
    auto* decode = app.add_subcommand("decode", "recover u from a received word");
    decode->add_option("--family", family_path)->required();
    decode->add_option("--rx", rx_path)->required();
    decode->add_option("--decoder", decoder, "gaussian | newton")->check(CLI::IsMember({"gaussian", "newton"}));

    // simulate
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::string pattern_mode = "exact", sim_decoder = "both";
    auto* simulate = app.add_subcommand("simulate", "encode, erase and decode random words");
    simulate->add_option("--family", family_path)->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_option("--pattern-mode", pattern_mode)->check(CLI::IsMember({"exact", "atleast"}));
    simulate->add_option("--decoder", sim_decoder)->check(CLI::IsMember({"gaussian", "newton", "both"}));
    simulate->add_option("--jobs", jobs);

    // bench
    std::string ks_text = "16,32,64";
    std::size_t bench_L = 8, bench_trials = 20;
    auto* bench = app.add_subcommand("bench", "field-operation counts of both decoders versus K");
    bench->add_option("--K", ks_text, "comma separated K values");
    bench->add_option("--trials", bench_trials);
    bench->add_option("--seed", seed);
    bench->add_option("--q", q)->default_val(127);
    bench->add_option("--L", bench_L);

    // mds-check
    auto* mds = app.add_subcommand("mds-check", "are all K x K minors of the zeroth rows nonsingular?");
    mds->add_option("file", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (construct->parsed()) {
            const FieldPtr field = Field::create(q);
            std::optional<Element> a;
            if (alpha) a = field->element(*alpha);
            std::optional<Family> family;
            if (variant == "qplus2") {
                family = construct_q_plus_2(field);
            } else {
                if (L == 0 || N == 0) throw UsageError("--L and --N are required for this variant");
                if (variant == "pascal") {
                    family = construct_pascal(L, N, K == 0 ? N : K, field, a);
                } else {
                    if (K != 0 && K != N) throw UsageError("the monomial variant needs K = N");
                    family = construct_monomial_variant(L, N, field, a);
                }
            }
            for (const auto& w : family->warnings()) err << "warning: " << w << '\n';
            emit(write_family(*family), out_path, out);
            return kOk;
        }
        if (verify_cmd->parsed()) {
            const Family family = load_family(file);
            const unsigned threads = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
            const auto report = verify(family, {parse_mode(mode), threads});
            if (report.passed) {
                out << "PASS " << report.patterns_checked << " patterns\n";
                return kOk;
            }
            out << "FAIL at " << to_string(*report.first_failure) << '\n'
                << report.failures << " of " << report.patterns_checked << " patterns fail\n"
                << "stacked matrix:\n"
                << to_string(*report.failing_matrix);
            return kFail;
        }
        if (bounds->parsed()) {
            out << to_string(max_L_bound(N, K, q)) << '\n';
            return kOk;
        }
        if (transform->parsed()) {
            const Family family = load_family(file);
            std::optional<Family> result;
            if (op == "row") {
                result = row_transform(family, index, parse_matrix(family.field(), matrix_text));
            } else if (op == "col") {
                result = col_transform(family, parse_matrix(family.field(), matrix_text));
            } else if (op == "permute") {
                const auto p = parse_list(perm_text);
                result = permute(family, std::vector<std::size_t>(p.begin(), p.end()));
            } else if (op == "tensor") {
                result = tensor_power(family, power);
            } else if (op == "pair-reversal") {
                result = pair_reversal(family);
            } else if (op == "normalize") {
                result = normalize_leading_pair(family);
            } else {
                result = reduce(family);
            }
            for (const auto& w : result->warnings()) err << "warning: " << w << '\n';
            emit(write_family(*result), out_path, out);
            return kOk;
        }
        if (encode->parsed()) {
            const Family family = load_family(family_path);
            const InfoVector u = parse_info(family, u_text);
            const auto x = taylor ? encode_taylor(family.field(), u, betas_for(family), family.N())
                                  : encode_matrix(family, u);
            ErasurePattern v{std::vector<std::size_t>(family.L(), family.N())};
            if (!pattern_text.empty()) {
                const auto p = parse_list(pattern_text);
                v.v.assign(p.begin(), p.end());
            }
            emit(write_received(*family.field(), family.K(), channel_erase(x, v)), out_path, out);
            return kOk;
        }
        if (decode->parsed()) {
            const Family family = load_family(family_path);
            const ReceivedWord rx = [&] {
                try {
                    return parse_received(read_file(rx_path));
                } catch (const ParseError& e) {
                    throw UsageError(rx_path + ": " + e.what());
                }
            }();
            if (rx.K != family.K() || rx.output.L() != family.L() || rx.output.N() != family.N() ||
                rx.field->order() != family.field()->order()) {
                throw UsageError("received word does not match the family parameters");
            }
            try {
                const InfoVector u = decoder == "newton"
                                         ? decode_newton(family.field(), rx.output, betas_for(family), family.K())
                                         : decode_gaussian(family, rx.output);
                for (std::size_t k = 0; k < u.size(); ++k) out << (k ? " " : "") << u[k].value;
                out << '\n';
                return kOk;
            } catch (const DecodeError& e) {
                err << "decode failed: " << e.what() << '\n';
                return kFail;
            }
        }
        if (simulate->parsed()) {
            const Family family = load_family(family_path);
            const bool use_gauss = sim_decoder != "newton";
            const bool use_newton = sim_decoder != "gaussian";
            std::optional<BetaSequence> betas;
            if (use_newton) betas = betas_for(family);
            const PatternMode pm = parse_mode(pattern_mode);
            const PatternSampler sampler(family.L(), family.N(), family.K(), pm);
            const Field& F = *family.field();

            const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
            struct Partial {
                SimulationStats gauss, newton;
                std::size_t mismatches = 0;
            };
            std::vector<Partial> partial(threads);
            auto work = [&](unsigned j) {
                for (std::size_t i = trials * j / threads; i < trials * (j + 1) / threads; ++i) {
                    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
                    std::mt19937_64 rng(seq);
                    const InfoVector u = random_info(F, family.K(), rng);
                    const ChannelOutput rx = channel_erase(encode_matrix(family, u), sampler(rng));
                    std::optional<InfoVector> ug, un;
                    auto run_one = [&](auto&& fn, SimulationStats& st, std::optional<InfoVector>& res) {
                        DecoderTrace trace;
                        try {
                            res = fn(trace);
                            st.ops += static_cast<double>(trace.field_ops);
                            if (*res == u) ++st.successes;
                            else ++st.wrong;
                        } catch (const DecodeError&) {
                            ++st.singular;
                        }
                    };
                    if (use_gauss) {
                        run_one([&](DecoderTrace& t) { return decode_gaussian(family, rx, &t); }, partial[j].gauss, ug);
                    }
                    if (use_newton) {
                        run_one([&](DecoderTrace& t) { return decode_newton(family.field(), rx, *betas, family.K(), &t); },
                                partial[j].newton, un);
                    }
                    if (ug && un && *ug != *un) ++partial[j].mismatches;
                }
            };
            if (threads == 1) {
                work(0);
            } else {
                std::vector<std::jthread> pool;
                for (unsigned j = 0; j < threads; ++j) pool.emplace_back(work, j);
            }
            SimulationStats g, n;
            std::size_t mismatches = 0;
            for (const auto& p : partial) {
                for (auto [dst, src] : {std::pair{&g, &p.gauss}, std::pair{&n, &p.newton}}) {
                    dst->successes += src->successes;
                    dst->wrong += src->wrong;
                    dst->singular += src->singular;
                    dst->ops += src->ops;
                }
                mismatches += p.mismatches;
            }
            out << "family L=" << family.L() << " N=" << family.N() << " K=" << family.K() << " q=" << F.order()
                << " trials=" << trials << " seed=" << seed << " patterns=" << pattern_mode << '\n'
                << "field ops count multiplications and inversions only\n"
                << std::left << std::setw(10) << "decoder" << std::setw(14) << "success_rate" << std::setw(8)
                << "wrong" << std::setw(10) << "singular" << "mean_field_ops\n";
            bool ok = mismatches == 0;
            auto row = [&](const char* name, const SimulationStats& s) {
                const double denom = trials ? static_cast<double>(trials) : 1.0;
                const std::size_t decoded = s.successes + s.wrong;
                out << std::left << std::setw(10) << name << std::setw(14) << std::fixed << std::setprecision(6)
                    << s.successes / denom << std::setw(8) << s.wrong << std::setw(10) << s.singular
                    << std::setprecision(2) << (decoded ? s.ops / static_cast<double>(decoded) : 0.0) << '\n';
                ok = ok && s.successes == trials;
            };
            if (use_gauss) row("gaussian", g);
            if (use_newton) row("newton", n);
            out << "cross-decoder mismatches: " << mismatches << '\n';
            return ok ? kOk : kFail;
        }
        if (bench->parsed()) {
            const auto ks = parse_list(ks_text);
            const auto rows = op_count_profile(std::vector<std::size_t>(ks.begin(), ks.end()), bench_trials,
                                               seed, q, bench_L);
            out << "# mean field multiplications+inversions per decode, q=" << q << " L=" << bench_L << " N=K\n"
                << "K gaussian newton\n";
            out << std::fixed << std::setprecision(2);
            for (const auto& r : rows) out << r.K << ' ' << r.gaussian_ops << ' ' << r.newton_ops << '\n';
            return kOk;
        }
        if (mds->parsed()) {
            const Family family = load_family(file);
            const bool ok = check_mds_zeroth_rows(family);
            out << (ok ? "MDS" : "NOT MDS") << '\n';
            return ok ? kOk : kFail;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TransformError& e) {
        err << "transform failed: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}

}  // namespace udm::cli
