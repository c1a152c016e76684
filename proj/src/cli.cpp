#include "trustalg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trustalg/algebra.hpp"
#include "trustalg/catalog.hpp"
#include "trustalg/error.hpp"
#include "trustalg/relations.hpp"
#include "trustalg/report.hpp"
#include "trustalg/whatif.hpp"

namespace trustalg::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) {
        throw IoError("cannot write '" + path + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, sep)) {
        parts.push_back(cur);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError(what + ": '" + text + "' is not a number");
    }
}

int parse_sign(const std::string& text) {
    if (text == "-" || text == "-1") {
        return -1;
    }
    if (text == "+" || text == "+1" || text == "1") {
        return +1;
    }
    throw ParseError("--signs: '" + text + "' is not one of -, +, -1, +1");
}

DateRange parse_window(const std::string& text) {
    const auto parts = split(text, '/');
    const auto start = parts.size() == 2 ? parse_date(parts[0]) : std::nullopt;
    const auto end = parts.size() == 2 ? parse_date(parts[1]) : std::nullopt;
    if (!start || !end) {
        throw ParseError("--window: expected START/END as YYYY-MM-DD/YYYY-MM-DD, got '" + text + "'");
    }
    if (*end < *start) {
        throw DomainError("--window: start is after end");
    }
    return DateRange{*start, *end};
}

/// Options shared by evaluate and whatif.
struct ModelFlags {
    std::string catalog_path;
    std::string assessment_path;
    std::string weights;
    std::optional<double> weight_hostile;
    std::optional<double> weight_neutral;
    std::optional<double> weight_friendly;
    std::string signs = "-,+,+";
    bool free_caps = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--catalog", catalog_path, "Catalog JSON (default: shipped catalog)");
        cmd.add_option("--assessment", assessment_path, "Assessment JSON")->required();
        cmd.add_option("--weights", weights, "Weights as hostile,neutral,friendly");
        cmd.add_option("--weight-hostile", weight_hostile, "Hostile weight");
        cmd.add_option("--weight-neutral", weight_neutral, "Neutral weight");
        cmd.add_option("--weight-friendly", weight_friendly, "Friendly weight");
        cmd.add_option("--signs", signs, "Signs as hostile,neutral,friendly (default -,+,+)");
        cmd.add_flag("--free-caps", free_caps, "Bound observed values by [0,1] instead of the catalog caps");
    }

    PropertyCatalog catalog() const {
        return catalog_path.empty() ? default_catalog() : load_catalog(read_file(catalog_path));
    }

    Assessment assessment() const { return parse_assessment(read_file(assessment_path)); }

    CapMode cap_mode() const { return free_caps ? CapMode::Free : CapMode::Strict; }

    WeightVector weight_vector() const {
        std::optional<double> w[3];
        if (!weights.empty()) {
            const auto parts = split(weights, ',');
            if (parts.size() != 3) {
                throw ParseError("--weights: expected three comma-separated values hostile,neutral,friendly");
            }
            for (int i = 0; i < 3; ++i) {
                w[i] = parse_real(parts[static_cast<std::size_t>(i)], "--weights");
            }
        }
        if (weight_hostile) w[0] = weight_hostile;
        if (weight_neutral) w[1] = weight_neutral;
        if (weight_friendly) w[2] = weight_friendly;
        if (!w[0] || !w[1] || !w[2]) {
            throw ParseError("weights missing: give --weights h,n,f or all of --weight-hostile, "
                             "--weight-neutral, --weight-friendly");
        }
        try {
            return validate_weights(*w[0], *w[1], *w[2]);
        } catch (const DomainError& e) {
            throw DomainError(std::string("stage 'weights': ") + e.what());
        }
    }

    ScalarConfig scalar_config() const {
        const auto parts = split(signs, ',');
        if (parts.size() != 3) {
            throw ParseError("--signs: expected three comma-separated signs hostile,neutral,friendly");
        }
        return ScalarConfig::make(parse_sign(parts[0]), parse_sign(parts[1]), parse_sign(parts[2]));
    }
};

void print_report(std::ostream& out, const std::string& title, const ValidationReport& report) {
    for (const auto& issue : report.issues) {
        out << title << ": " << (issue.severity == Severity::Error ? "error" : "warning") << ": "
            << issue.path << ": " << issue.message << "\n";
    }
    out << title << ": " << (report.ok() ? "ok" : std::to_string(report.error_count()) + " error(s)") << "\n";
}

int cmd_validate(const std::string& catalog_path, const std::string& assessment_path, bool free_caps,
                 std::ostream& out) {
    bool ok = true;
    std::optional<PropertyCatalog> catalog;
    if (!catalog_path.empty()) {
        auto doc = parse_catalog_document(read_file(catalog_path));
        const auto report = validate_catalog(doc);
        print_report(out, catalog_path, report);
        ok = ok && report.ok();
        if (report.ok()) {
            catalog = make_catalog(std::move(doc));
        }
    }
    if (!assessment_path.empty()) {
        const auto assessment = parse_assessment(read_file(assessment_path));
        if (!catalog_path.empty() && !catalog) {
            out << assessment_path << ": skipped, catalog is invalid\n";
        } else {
            const auto report = validate_assessment(assessment, catalog ? *catalog : default_catalog(),
                                                    free_caps ? CapMode::Free : CapMode::Strict);
            print_report(out, assessment_path, report);
            ok = ok && report.ok();
        }
    }
    return ok ? kExitOk : kExitDomain;
}

std::string render_matrix(const std::vector<std::string>& ids, const RelationMatrix& m, bool csv) {
    std::ostringstream os;
    if (ids.empty()) {
        return {};
    }
    if (csv) {
        os << "subject";
        for (const auto& id : ids) {
            os << ',' << id;
        }
        os << "\n";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            os << ids[i];
            for (const auto& cell : m[i]) {
                os << ',' << label_text(cell);
            }
            os << "\n";
        }
        return os.str();
    }
    std::size_t width = std::string("undefined").size();
    for (const auto& id : ids) {
        width = std::max(width, id.size());
    }
    const auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
    os << pad("");
    for (const auto& id : ids) {
        os << pad(id);
    }
    os << "\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        os << pad(ids[i]);
        for (const auto& cell : m[i]) {
            os << pad(label_text(cell));
        }
        os << "\n";
    }
    // Trailing spaces are trimmed so the output diffs cleanly.
    std::string text = os.str();
    std::string trimmed;
    for (const auto& line : split(text, '\n')) {
        if (line.empty()) {
            continue;
        }
        trimmed += line.substr(0, line.find_last_not_of(' ') + 1) + "\n";
    }
    return trimmed;
}

RelationStore load_store_or_empty(const std::string& path) {
    if (!std::filesystem::exists(path)) {
        return RelationStore{};
    }
    return RelationStore::from_json(read_file(path));
}

void check_format(const std::string& format) {
    if (format != "text" && format != "json" && format != "csv") {
        throw ParseError("--format: expected text, json or csv");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trust algebra for directed nation-to-nation relations", "trustalg"};
    app.require_subcommand(1);

    // validate
    std::string v_catalog;
    std::string v_assessment;
    bool v_free = false;
    auto* validate = app.add_subcommand("validate", "Check catalog and/or assessment documents");
    validate->add_option("--catalog", v_catalog, "Catalog JSON");
    validate->add_option("--assessment", v_assessment, "Assessment JSON (checked against --catalog or the shipped catalog)");
    validate->add_flag("--free-caps", v_free, "Bound observed values by [0,1] instead of the catalog caps");

    // evaluate
    ModelFlags e_flags;
    std::string e_bands;
    std::string e_format = "text";
    std::string e_store;
    double e_delta = 0.1;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate one assessment");
    e_flags.attach(*evaluate_cmd);
    evaluate_cmd->add_option("--bands", e_bands, "Band table JSON for finer-grained labels");
    evaluate_cmd->add_option("--format", e_format, "text, json or csv");
    evaluate_cmd->add_option("--delta", e_delta, "Distance used by the strength reading (default 0.1)");
    evaluate_cmd->add_option("--store", e_store, "Also record the result in this store document");

    // matrix
    std::string m_store;
    std::string m_window;
    std::string m_format = "text";
    std::vector<std::string> m_ids;
    auto* matrix = app.add_subcommand("matrix", "Print the relation matrix for a set of nations");
    matrix->add_option("--store", m_store, "Store JSON")->required();
    matrix->add_option("--window", m_window, "Observation window START/END")->required();
    matrix->add_option("--format", m_format, "text or csv");
    matrix->add_option("ids", m_ids, "Nation ids, in row order");

    // whatif
    ModelFlags w_flags;
    std::string w_sweep_weight;
    std::string w_sweep_property;
    double w_from = 0.0;
    double w_to = 0.0;
    double w_step = 0.0;
    std::string w_format = "text";
    auto* whatif = app.add_subcommand("whatif", "Sweep one weight or property value and report label flips");
    w_flags.attach(*whatif);
    auto* sw = whatif->add_option("--sweep-weight", w_sweep_weight, "Category whose weight is swept");
    auto* sp = whatif->add_option("--sweep-property", w_sweep_property, "Property id whose value is swept");
    sw->excludes(sp);
    whatif->add_option("--from", w_from, "First swept value")->required();
    whatif->add_option("--to", w_to, "Last swept value")->required();
    whatif->add_option("--step", w_step, "Step size (> 0)")->required();
    whatif->add_option("--format", w_format, "text, json or csv");

    // catalog show
    std::string c_format = "text";
    auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the shipped property catalog");
    catalog_cmd->require_subcommand(1);
    auto* show = catalog_cmd->add_subcommand("show", "Print the shipped catalog");
    show->add_option("--format", c_format, "text or json");

    // nation add
    std::string n_store;
    Nation n_nation;
    bool n_un = false;
    auto* nation_cmd = app.add_subcommand("nation", "Manage the nation registry of a store");
    nation_cmd->require_subcommand(1);
    auto* add = nation_cmd->add_subcommand("add", "Register a nation (creates the store if missing)");
    add->add_option("--store", n_store, "Store JSON")->required();
    add->add_option("--id", n_nation.id, "Nation id")->required();
    add->add_option("--name", n_nation.name, "Display name");
    add->add_flag("--un-member", n_un, "The nation is a UN member state");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitIo;
    }

    try {
        if (*validate) {
            if (v_catalog.empty() && v_assessment.empty()) {
                throw ParseError("validate: give --catalog and/or --assessment");
            }
            return cmd_validate(v_catalog, v_assessment, v_free, out);
        }
        if (*evaluate_cmd) {
            check_format(e_format);
            const auto weights = e_flags.weight_vector();
            const auto signs = e_flags.scalar_config();
            const auto catalog = e_flags.catalog();
            const auto assessment = e_flags.assessment();
            ReportOptions options;
            options.signs = signs;
            options.cap_mode = e_flags.cap_mode();
            options.interpretation.delta = e_delta;
            options.assessment_ref = std::filesystem::path(e_flags.assessment_path).filename().string();
            if (!e_bands.empty()) {
                options.bands = load_band_table(read_file(e_bands), compute_bounds(weights, signs));
            }
            const auto report = build_report(catalog, assessment, weights, options);
            if (e_format == "json") {
                out << report_to_json(report);
            } else if (e_format == "csv") {
                out << render_report_csv(report);
            } else {
                out << render_report_text(report);
            }
            if (!e_store.empty()) {
                auto store = RelationStore::from_json(read_file(e_store));
                store.evaluate_relation(assessment.subject, assessment.object, assessment, catalog, weights,
                                        signs, options.cap_mode, options.assessment_ref);
                write_file(e_store, store.to_json());
            }
            return kExitOk;
        }
        if (*matrix) {
            if (m_format != "text" && m_format != "csv") {
                throw ParseError("--format: expected text or csv");
            }
            const auto window = parse_window(m_window);
            const auto store = RelationStore::from_json(read_file(m_store));
            out << render_matrix(m_ids, store.relation_matrix(m_ids, window), m_format == "csv");
            return kExitOk;
        }
        if (*whatif) {
            check_format(w_format);
            SensitivitySpec spec;
            if (!w_sweep_weight.empty()) {
                const auto c = parse_category(w_sweep_weight);
                if (!c) {
                    throw ParseError("--sweep-weight: expected hostile, neutral or friendly");
                }
                spec.target = WeightTarget{*c};
            } else if (!w_sweep_property.empty()) {
                spec.target = PropertyTarget{w_sweep_property};
            } else {
                throw ParseError("whatif: give --sweep-weight or --sweep-property");
            }
            spec.from = w_from;
            spec.to = w_to;
            spec.step = w_step;
            const auto result = run_sweep(w_flags.catalog(), w_flags.assessment(), w_flags.weight_vector(), spec,
                                          w_flags.scalar_config(), w_flags.cap_mode());
            if (w_format == "json") {
                out << render_sweep_json(result);
            } else if (w_format == "csv") {
                out << render_sweep_csv(result);
            } else {
                out << render_sweep_text(result, spec);
            }
            return kExitOk;
        }
        if (*show) {
            const auto& catalog = default_catalog();
            if (c_format == "json") {
                out << serialize_catalog(catalog);
                return kExitOk;
            }
            if (c_format != "text") {
                throw ParseError("--format: expected text or json");
            }
            out << "catalog " << catalog.version() << "\n";
            for (auto c : {RelationCategory::Friendly, RelationCategory::Neutral, RelationCategory::Hostile}) {
                out << "\n" << display_name(c) << " (" << catalog.count(c) << " properties)\n";
                double total = 0.0;
                for (const auto& p : catalog.properties()) {
                    if (p.category == c) {
                        out << "  " << p.id << "  " << format_fixed(p.cap) << "  " << p.description << "\n";
                        total += p.cap;
                    }
                }
                out << "  total " << format_fixed(total) << "\n";
            }
            return kExitOk;
        }
        if (*add) {
            auto store = load_store_or_empty(n_store);
            n_nation.un_member = n_un;
            if (n_nation.name.empty()) {
                n_nation.name = n_nation.id;
            }
            store.register_nation(n_nation);
            write_file(n_store, store.to_json());
            return kExitOk;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const TrustError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}

} // namespace trustalg::cli
