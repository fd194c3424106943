#include "modulilog/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "modulilog/json_io.hpp"

namespace modulilog {

namespace {

using Complex = std::complex<double>;

struct RunConfig {
    double tol = 1e-8;
    int max_n = 4;
    std::string format = "json";
    unsigned long seed = 0;
    std::string out_file;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail("precondition", "cannot parse number '" + text + "'");
    }
}

// complex values on the command line are "re" or "re,im"
Complex parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
    fail("precondition", "complex value must be 're' or 're,im', got '" + text + "'");
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    for (const auto& item : split(text, ';')) out.push_back(parse_complex(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail("precondition", "cannot parse integer '" + item + "'");
        }
    }
    return out;
}

// families on the command line: parts ';'-separated, marks ','-separated,
// e.g. "0,s1;0,s1,s2"
std::vector<StablePartition> parse_family(const MarkedSet& host, const std::string& text) {
    std::vector<StablePartition> out;
    for (const auto& part : split(text, ';')) {
        std::vector<Mark> marks;
        for (const auto& name : split(part, ','))
            marks.push_back(Mark::parse(name));
        out.push_back(StablePartition::from_marks(host, marks));
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string format_complex(Complex v) {
    return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
           format_double(std::abs(v.imag())) + "i";
}

void render_table(const OrderedJson& j, std::ostream& os, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array())
                render_table(item, os, indent);
            else
                os << pad << item.dump() << "\n";
        }
        return;
    }
    if (j.is_object()) {
        if (j.contains("re") && j.contains("im") && j.size() == 2) {
            os << pad << format_complex({j["re"].get<double>(), j["im"].get<double>()}) << "\n";
            return;
        }
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                os << pad << key << ":\n";
                render_table(value, os, indent + 2);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
        return;
    }
    os << pad << j.dump() << "\n";
}

std::string csv_cell(const OrderedJson& value) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void render_csv(const OrderedJson& j, std::ostream& os) {
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        bool first = true;
        for (const auto& [key, value] : j.front().items()) {
            (void)value;
            os << (first ? "" : ",") << key;
            first = false;
        }
        os << "\n";
        for (const auto& row : j) {
            first = true;
            for (const auto& [key, value] : row.items()) {
                (void)key;
                os << (first ? "" : ",") << csv_cell(value);
                first = false;
            }
            os << "\n";
        }
        return;
    }
    if (j.is_object()) {
        os << "key,value\n";
        for (const auto& [key, value] : j.items())
            os << key << "," << csv_cell(value) << "\n";
        return;
    }
    os << j.dump() << "\n";
}

// facet compatibility and vertex membership as an undirected DOT graph
std::string render_dot(int n) {
    const auto fs = facets(n);
    const auto vs = vertices(n);
    std::ostringstream os;
    os << "graph stasheff_b" << n << " {\n";
    for (std::size_t i = 0; i < fs.size(); ++i)
        os << "  f" << i << " [shape=box,label=\"" << fs[i].host().mask_to_string(fs[i].part())
           << "\"];\n";
    for (std::size_t v = 0; v < vs.size(); ++v)
        os << "  v" << v << " [shape=point];\n";
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (intersection_count(fs[i], fs[j]) == 3)
                os << "  f" << i << " -- f" << j << " [style=dashed];\n";
    for (std::size_t v = 0; v < vs.size(); ++v)
        for (const auto& member : vs[v].family().members()) {
            const auto it = std::find(fs.begin(), fs.end(), member);
            os << "  v" << v << " -- f" << (it - fs.begin()) << ";\n";
        }
    os << "}\n";
    return os.str();
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const OrderedJson& payload, std::ostream& out) {
    std::ostringstream body;
    if (cfg.format == "json")
        body << payload.dump(2) << "\n";
    else if (cfg.format == "table")
        render_table(payload, body);
    else if (cfg.format == "csv")
        render_csv(payload, body);
    else
        throw UsageError("format '" + cfg.format + "' not supported for this subcommand");
    if (!cfg.out_file.empty()) {
        std::ofstream file(cfg.out_file);
        if (!file) fail("domain", "cannot open output file '" + cfg.out_file + "'");
        file << body.str();
    } else {
        out << body.str();
    }
}

void emit_text(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (!cfg.out_file.empty()) {
        std::ofstream file(cfg.out_file);
        if (!file) fail("domain", "cannot open output file '" + cfg.out_file + "'");
        file << text;
    } else {
        out << text;
    }
}

std::vector<Complex> random_a_vector(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::vector<Complex> values;
    while (static_cast<int>(values.size()) < n) {
        const Complex v{box(rng), box(rng)};
        if (std::abs(v) < 0.1 || std::abs(v - Complex(1.0)) < 0.1) continue;
        values.push_back(v);
    }
    return values;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            bool err_is_tty) {
    CLI::App app{"Boundary combinatorics of genus-0 stable curves, polylogarithm "
                 "numerics, and the dilogarithm period matrix"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "absolute tolerance")
        ->envname("MODULILOG_TOL")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n", cfg.max_n, "weight guard for quadrature")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table", "dot"}));
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--out", cfg.out_file, "write output to a file instead of stdout");

    int n = 1, k = 1, mark_index = 1, sweep = 0;
    double eps_tolerance = 0.0;
    std::string a_text, x_text, family_text, part_text, index_text, path_text, s_text,
        z_text = "0.5,0", zseq_text = "0.9;0.99;0.999;0.9999";
    bool allow_divergent = false;

    auto* cmd_facets = app.add_subcommand("facets", "strictly ordered stable partitions");
    cmd_facets->add_option("--n", n)->required();

    auto* cmd_faces = app.add_subcommand("faces", "codimension-k good families");
    cmd_faces->add_option("--n", n)->required();
    cmd_faces->add_option("--k", k)->required();

    auto* cmd_vertices = app.add_subcommand("vertices", "maximal good families");
    cmd_vertices->add_option("--n", n)->required();

    auto* cmd_image = app.add_subcommand("vertex-image", "image of a vertex at one mark");
    cmd_image->add_option("--n", n)->required();
    cmd_image->add_option("--family", family_text, "parts ';'-separated, marks ','-separated")
        ->required();
    cmd_image->add_option("--i", mark_index)->required();

    auto* cmd_contract = app.add_subcommand("contract", "contract a face or a partition");
    cmd_contract->add_option("--n", n)->required();
    cmd_contract->add_option("--s", s_text, "mark to forget, e.g. s2")->required();
    cmd_contract->add_option("--family", family_text);
    cmd_contract->add_option("--part", part_text);

    auto* cmd_divisor = app.add_subcommand("divisor-a", "singular locus of the n-form");
    cmd_divisor->add_option("--n", n)->required();
    cmd_divisor->add_option("--a", a_text, "a-vector 're,im;re,im;...'")->required();
    cmd_divisor->add_option("--eps", eps_tolerance, "0/1 membership tolerance");

    auto* cmd_avoid = app.add_subcommand("check-avoidance", "scan faces against the locus");
    cmd_avoid->add_option("--n", n)->required();
    cmd_avoid->add_option("--a", a_text);
    cmd_avoid->add_option("--sweep", sweep, "number of random samples");
    cmd_avoid->add_option("--eps", eps_tolerance);

    auto* cmd_polylog = app.add_subcommand("polylog", "nested series value");
    cmd_polylog->add_option("--index", index_text, "comma-separated indices")->required();
    cmd_polylog->add_option("--x", x_text, "arguments 're,im;...'")->required();
    cmd_polylog->add_flag("--allow-divergent", allow_divergent);

    auto* cmd_mzv = app.add_subcommand("mzv", "multiple zeta value");
    cmd_mzv->add_option("--index", index_text)->required();

    auto* cmd_itint = app.add_subcommand("itint", "iterated path integral");
    cmd_itint->add_option("--a", a_text)->required();
    cmd_itint->add_option("--path", path_text, "waypoints 're,im;...' (default straight)");

    auto* cmd_period = app.add_subcommand("period-matrix", "dilogarithm period matrix");
    cmd_period->add_option("--z", z_text)->required();
    cmd_period->add_option("--path", path_text);

    auto* cmd_jump = app.add_subcommand("dimension-jump", "degeneration along z -> 1");
    cmd_jump->add_option("--z-seq", zseq_text, "samples 're,im;...'");

    std::reverse(args.begin(), args.end()); // CLI11 consumes reversed args
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto path_or_straight = [&]() {
            if (path_text.empty()) return PathSpec::straight();
            PathSpec p;
            p.waypoints = parse_complex_list(path_text);
            return p;
        };

        if (*cmd_facets) {
            if (cfg.format == "dot") {
                emit_text(cfg, render_dot(n), out);
                return 0;
            }
            OrderedJson payload = OrderedJson::array();
            for (const auto& p : facets(n)) payload.push_back(partition_json(p));
            emit(cfg, payload, out);
        } else if (*cmd_faces || *cmd_vertices) {
            if (cfg.format == "dot") {
                emit_text(cfg, render_dot(n), out);
                return 0;
            }
            OrderedJson payload = OrderedJson::array();
            for (const auto& f : *cmd_vertices ? vertices(n) : faces(n, k))
                payload.push_back(face_json(f));
            emit(cfg, payload, out);
        } else if (*cmd_image) {
            const MarkedSet host(n);
            const Face vertex{GoodFamily(host, parse_family(host, family_text))};
            const VertexImage image = vertex_image(vertex, mark_index);
            emit(cfg,
                 OrderedJson{{"n", n}, {"i", mark_index}, {"image", to_string(image)}},
                 out);
        } else if (*cmd_contract) {
            const MarkedSet host(n);
            const Mark s = Mark::parse(s_text);
            if (!family_text.empty()) {
                const Face vertex{GoodFamily(host, parse_family(host, family_text))};
                const auto outcome = contract_face(vertex, s);
                emit(cfg,
                     OrderedJson{{"image", face_json(outcome.image)},
                                 {"collapsed", outcome.collapsed},
                                 {"merged", outcome.merged}},
                     out);
            } else if (!part_text.empty()) {
                const auto family = parse_family(host, part_text);
                const auto contracted = contract_partition(family.at(0), s);
                emit(cfg,
                     contracted
                         ? OrderedJson{{"collapses", false},
                                       {"result", partition_json(*contracted)}}
                         : OrderedJson{{"collapses", true}},
                     out);
            } else {
                throw UsageError("contract needs --family or --part");
            }
        } else if (*cmd_divisor) {
            const MarkedSet host(n);
            AVector a{parse_complex_list(a_text), eps_tolerance};
            emit(cfg, locus_json(singular_locus(host, a)), out);
        } else if (*cmd_avoid) {
            if (sweep > 0) {
                std::mt19937_64 rng(cfg.seed);
                long faces_checked = 0, violations = 0;
                OrderedJson violating = OrderedJson::array();
                for (int i = 0; i < sweep; ++i) {
                    AVector a{random_a_vector(rng, n), eps_tolerance};
                    const auto report = check_avoidance(n, a);
                    faces_checked += report.faces_checked;
                    violations += static_cast<long>(report.violations.size());
                    if (!report.violations.empty()) violating.push_back(i);
                }
                emit(cfg,
                     OrderedJson{{"n", n},
                                 {"sweep", sweep},
                                 {"seed", cfg.seed},
                                 {"faces_checked", faces_checked},
                                 {"violations", violations},
                                 {"violating_samples", std::move(violating)}},
                     out);
            } else {
                if (a_text.empty()) throw UsageError("check-avoidance needs --a or --sweep");
                AVector a{parse_complex_list(a_text), eps_tolerance};
                emit(cfg, avoidance_json(check_avoidance(n, a)), out);
            }
        } else if (*cmd_polylog) {
            const PolylogIndex idx(parse_int_list(index_text), allow_divergent);
            const auto x = parse_complex_list(x_text);
            emit(cfg, series_json(polylog_series(idx, x, cfg.tol)), out);
        } else if (*cmd_mzv) {
            const PolylogIndex idx(parse_int_list(index_text));
            emit(cfg, series_json(mzv(idx, cfg.tol)), out);
        } else if (*cmd_itint) {
            AVector a{parse_complex_list(a_text)};
            ItintOptions options;
            options.max_depth = cfg.max_n;
            emit(cfg, quadrature_json(iterated_integral(a, path_or_straight(), cfg.tol, options)),
                 out);
        } else if (*cmd_period) {
            const Complex z = parse_complex(z_text);
            if (path_text.empty()) {
                emit(cfg, period_matrix_json(period_matrix(z, cfg.tol)), out);
            } else {
                const PathSpec p = path_or_straight();
                emit(cfg, period_matrix_json(period_matrix(z, cfg.tol, &p)), out);
            }
        } else if (*cmd_jump) {
            const auto zs = parse_complex_list(zseq_text);
            emit(cfg, degeneration_json(degeneration_report(zs, cfg.tol)), out);
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (err_is_tty)
            err << "error [" << e.code() << "]: " << e.what() << "\n";
        else
            err << OrderedJson{{"error", OrderedJson{{"code", e.code()}, {"message", e.what()}}}}
                       .dump()
                << "\n";
        return 1;
    }
}

} // namespace modulilog
