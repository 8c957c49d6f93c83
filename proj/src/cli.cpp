#include "redcyc/cli.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "redcyc/census.hpp"
#include "redcyc/errors.hpp"
#include "redcyc/ff.hpp"
#include "redcyc/numtheory.hpp"
#include "redcyc/reps.hpp"

namespace redcyc::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Report {
    std::string command;
    ordered_json params = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
    ordered_json summary = ordered_json::object();
};

std::string render_json(const Report& r) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = r.command;
    doc["params"] = r.params;
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.rows) doc["rows"].push_back(row);
    doc["summary"] = r.summary;
    return doc.dump(2) + "\n";
}

std::string cell_text(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const Report& r) {
    std::string out;
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(r.columns[i]);
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cell_text(row.at(r.columns[i])));
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const Report& r) {
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(r.rows.size());
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            std::string s = cell_text(row.at(r.columns[i]));
            if (s.empty()) s = "-";
            width[i] = std::max(width[i], s.size());
            line.push_back(std::move(s));
        }
        cells.push_back(std::move(line));
    }
    std::string out;
    auto append = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out += line[i];
            if (i + 1 < line.size()) out.append(width[i] - line[i].size() + 2, ' ');
        }
        out += '\n';
    };
    append(r.columns);
    for (const auto& line : cells) append(line);
    return out;
}

std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::json: return render_json(r);
        case Format::csv: return render_csv(r);
        default: return render_table(r);
    }
}

std::string summary_line(const Report& r) {
    std::string s = r.command + ":";
    for (auto it = r.summary.begin(); it != r.summary.end(); ++it)
        s += " " + it.key() + "=" + cell_text(it.value());
    return s;
}

void emit(const Report& r, const RunConfig& cfg, std::ostream& out) {
    std::string text = render(r, cfg.format);
    if (cfg.out_path) {
        std::ofstream f(*cfg.out_path, std::ios::binary);
        if (!f) throw InvalidInput("cannot open output file: " + *cfg.out_path);
        f << text;
    }
    if (cfg.quiet) return;
    if (cfg.out_path) {
        out << summary_line(r) << "\n";
    } else {
        out << text;
        if (cfg.format == Format::table) out << summary_line(r) << "\n";
    }
}

// Deterministic result slots regardless of scheduling; first exception wins.
void parallel_for(std::uint64_t n, unsigned threads, const std::function<void(std::uint64_t)>& f) {
    threads = std::max(1u, threads);
    if (threads == 1 || n <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < n;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

const std::vector<std::string> kVerifyColumns = {
    "q",        "m",          "rho",      "delta",               "involutions", "n_formula",
    "n_diag",   "n_burnside", "n_census", "irreducible_classes", "match"};

struct VerifyRow {
    ordered_json row;
    bool ok = true;
    bool display = true;
};

VerifyRow verify_row(const census::CensusReport& rep) {
    const nt::FactoredInt mf = nt::factorize(rep.m);
    const nt::CountReport cr = nt::count_reducible_classes(mf);
    VerifyRow vr;
    bool ok = census::report_ok(rep);
    ordered_json row;
    row["q"] = rep.q;
    row["m"] = rep.m;
    row["rho"] = cr.rho;
    row["delta"] = cr.delta;
    row["involutions"] = cr.involutions;
    if (rep.formula_n) {
        const std::uint64_t n_diag = census::diagonal_model_count(rep.m);
        const std::uint64_t n_burnside = census::burnside_count(rep.m);
        ok = ok && n_diag == *rep.formula_n && n_burnside == *rep.formula_n;
        row["n_formula"] = *rep.formula_n;
        row["n_diag"] = n_diag;
        row["n_burnside"] = n_burnside;
    } else {
        row["n_formula"] = nullptr;
        row["n_diag"] = nullptr;
        row["n_burnside"] = nullptr;
        vr.display = false;  // verify prints the m | q-1 rows
    }
    row["n_census"] = rep.reducible_classes;
    row["irreducible_classes"] = rep.irreducible_classes;
    row["match"] = ok;
    vr.row = std::move(row);
    vr.ok = ok;
    return vr;
}

int run_count(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.m) throw InvalidInput("count: --m is required");
    const nt::FactoredInt mf = nt::factorize(*cfg.m);
    const nt::CountReport cr = nt::count_reducible_classes(mf);
    Report rep;
    rep.command = "count";
    rep.params["m"] = *cfg.m;
    rep.columns = {"m", "rho", "delta", "involutions", "n_classes", "fix_bijective"};
    ordered_json row;
    row["m"] = cr.m;
    row["rho"] = cr.rho;
    row["delta"] = cr.delta;
    row["involutions"] = cr.involutions;
    row["n_classes"] = cr.n_classes;
    row["fix_bijective"] = nt::fix_bijectivity_predicate(mf);
    rep.rows.push_back(row);
    rep.summary["status"] = "ok";
    emit(rep, cfg, out);
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.field) throw InvalidInput("verify: --q is required");
    const ff::FieldSpec F = ff::FieldSpec::from_designation(*cfg.field);
    std::vector<census::CensusReport> reports;
    bool single = cfg.m.has_value();
    if (single) {
        const std::uint64_t m = *cfg.m;
        if (m == 0 || (F.q() * F.q() - 1) % m != 0)
            throw InvalidInput("verify: m must divide q^2-1");
        reports.push_back(census::census_for(F, m));
    } else {
        reports = census::verify_field(F);
    }
    Report rep;
    rep.command = "verify";
    rep.params["field"] = *cfg.field;
    rep.params["q"] = F.q();
    if (single) rep.params["m"] = *cfg.m;
    rep.columns = kVerifyColumns;
    std::uint64_t failures = 0;
    for (const auto& r : reports) {
        VerifyRow vr = verify_row(r);
        if (!vr.ok) ++failures;
        if (vr.display || single) rep.rows.push_back(std::move(vr.row));
    }
    rep.summary["reports"] = reports.size();
    rep.summary["rows"] = rep.rows.size();
    rep.summary["failures"] = failures;
    rep.summary["status"] = failures == 0 ? "ok" : "mismatch";
    emit(rep, cfg, out);
    return failures == 0 ? 0 : 1;
}

int run_census(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.field) throw InvalidInput("census: --q is required");
    if (!cfg.m) throw InvalidInput("census: --m is required");
    const ff::FieldSpec F = ff::FieldSpec::from_designation(*cfg.field);
    const census::CensusReport r = census::census_for(F, *cfg.m);
    Report rep;
    rep.command = "census";
    rep.params["field"] = *cfg.field;
    rep.params["q"] = F.q();
    rep.params["m"] = *cfg.m;
    rep.columns = {"index", "kind", "order", "class_size", "min_generator"};
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const census::ClassInfo& cls = r.classes[i];
        ordered_json row;
        row["index"] = i;
        row["kind"] = cls.kind == census::SubgroupKind::scalar ? "scalar"
                      : cls.kind == census::SubgroupKind::split_reducible ? "split_reducible"
                                                                          : "irreducible";
        row["order"] = cls.representative.order;
        row["class_size"] = cls.class_size;
        row["min_generator"] = gl2::to_string(F, cls.representative.min_generator);
        rep.rows.push_back(std::move(row));
    }
    rep.summary["total_subgroups"] = r.total_subgroups;
    rep.summary["reducible_classes"] = r.reducible_classes;
    rep.summary["irreducible_classes"] = r.irreducible_classes;
    if (r.formula_n) {
        rep.summary["n_formula"] = *r.formula_n;
        rep.summary["match"] = *r.match;
    }
    emit(rep, cfg, out);
    return (r.match && !*r.match) ? 1 : 0;
}

int run_reps(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.field) throw InvalidInput("reps: --q is required");
    if (!cfg.m) throw InvalidInput("reps: --m is required");
    const ff::FieldSpec F = ff::FieldSpec::from_designation(*cfg.field);
    const auto entries = reps::representatives(F, *cfg.m);
    Report rep;
    rep.command = "reps";
    rep.params["field"] = *cfg.field;
    rep.params["q"] = F.q();
    rep.params["m"] = *cfg.m;
    rep.columns = {"type", "a", "b", "generator", "involution_l", "template_k", "normalizer"};
    for (const auto& e : entries) {
        ordered_json row;
        row["type"] = e.type == reps::RepType::I ? "I" : e.type == reps::RepType::II ? "II" : "III";
        row["a"] = e.exponents.a;
        row["b"] = e.exponents.b;
        row["generator"] = gl2::to_string(F, e.generator);
        if (e.involution_exponent)
            row["involution_l"] = *e.involution_exponent;
        else
            row["involution_l"] = nullptr;
        if (e.type_iii_exponents) {
            std::string s = "(";
            for (std::size_t i = 0; i < e.type_iii_exponents->size(); ++i) {
                if (i) s += ',';
                s += std::to_string((*e.type_iii_exponents)[i]);
            }
            s += ')';
            row["template_k"] = s;
        } else {
            row["template_k"] = nullptr;
        }
        row["normalizer"] = reps::normalizer_type(*cfg.m, e.exponents) ==
                                    reps::NormalizerType::full_monomial
                                ? "full_monomial"
                                : "diagonal_only";
        rep.rows.push_back(std::move(row));
    }
    rep.summary["classes"] = entries.size();
    rep.summary["status"] = "ok";
    emit(rep, cfg, out);
    return 0;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.m_max && !cfg.q_max) throw InvalidInput("sweep: --m-max or --q-max is required");
    if ((cfg.m_max && *cfg.m_max == 0) || (cfg.q_max && *cfg.q_max == 0))
        throw InvalidInput("sweep: empty range");
    Report rep;
    rep.command = "sweep";
    if (cfg.m_max) rep.params["m_max"] = *cfg.m_max;
    if (cfg.q_max) rep.params["q_max"] = *cfg.q_max;
    rep.columns = kVerifyColumns;

    std::uint64_t failures = 0;

    if (cfg.m_max) {
        const std::uint64_t n = *cfg.m_max;
        std::vector<ordered_json> rows(n);
        std::vector<std::uint8_t> ok(n, 1);
        parallel_for(n, cfg.threads, [&](std::uint64_t i) {
            const std::uint64_t m = i + 1;
            const nt::FactoredInt mf = nt::factorize(m);
            const nt::CountReport cr = nt::count_reducible_classes(mf);
            const std::uint64_t n_diag = census::diagonal_model_count(m);
            const std::uint64_t n_burnside = census::burnside_count(m);
            const bool row_ok = n_diag == cr.n_classes && n_burnside == cr.n_classes;
            ordered_json row;
            row["q"] = nullptr;
            row["m"] = m;
            row["rho"] = cr.rho;
            row["delta"] = cr.delta;
            row["involutions"] = cr.involutions;
            row["n_formula"] = cr.n_classes;
            row["n_diag"] = n_diag;
            row["n_burnside"] = n_burnside;
            row["n_census"] = nullptr;
            row["irreducible_classes"] = nullptr;
            row["match"] = row_ok;
            rows[i] = std::move(row);
            ok[i] = row_ok ? 1 : 0;
        });
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!ok[i]) ++failures;
            rep.rows.push_back(std::move(rows[i]));
        }
    }

    if (cfg.q_max) {
        std::vector<std::uint64_t> qs;
        for (std::uint64_t q = 2; q <= *cfg.q_max; ++q)
            if (nt::factorize(q).factors.size() == 1) qs.push_back(q);
        std::vector<std::vector<VerifyRow>> per_q(qs.size());
        parallel_for(qs.size(), cfg.threads, [&](std::uint64_t j) {
            const ff::FieldSpec F = ff::FieldSpec::make(
                nt::factorize(qs[j]).factors[0].prime, nt::factorize(qs[j]).factors[0].exponent);
            for (const auto& r : census::verify_field(F)) per_q[j].push_back(verify_row(r));
        });
        for (auto& rows : per_q)
            for (auto& vr : rows) {
                if (!vr.ok) ++failures;
                rep.rows.push_back(std::move(vr.row));
            }
    }

    rep.summary["rows"] = rep.rows.size();
    rep.summary["failures"] = failures;
    rep.summary["status"] = failures == 0 ? "ok" : "mismatch";
    emit(rep, cfg, out);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "count") return run_count(cfg, out);
        if (cfg.command == "verify") return run_verify(cfg, out);
        if (cfg.command == "census") return run_census(cfg, out);
        if (cfg.command == "reps") return run_reps(cfg, out);
        if (cfg.command == "sweep") return run_sweep(cfg, out);
        throw InvalidInput("unknown command: " + cfg.command);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace redcyc::cli
