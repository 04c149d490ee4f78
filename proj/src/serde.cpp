#include "mathon/serde.hpp"

#include <sstream>

namespace mathon {

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<int>(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, int modulus) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<int>>());
    return Matrix::from_rows(rows, modulus);
}

Json subspace_to_json(const Subspace& s) {
    return Json{{"basis", matrix_to_json(s.basis())},
                {"d", s.ambient_points() - 1},
                {"q", s.modulus()}};
}

Subspace subspace_from_json(const Json& j) {
    Matrix m = matrix_from_json(j.at("basis"), j.at("q").get<int>());
    if (m.cols() != j.at("d").get<int>() + 1) throw Error("subspace JSON dimension mismatch");
    return Subspace::span_of_rows(m);
}

Json lineset_to_json(const LineSet& ls) {
    Json arr = Json::array();
    for (const Subspace& l : ls.lines) arr.push_back(matrix_to_json(l.basis()));
    return arr;
}

Json incidence_to_json(const IncidenceStructure& inc) {
    Json pairs = Json::array();
    for (int l = 0; l < inc.num_lines(); ++l)
        for (int p : inc.points_of_line(l)) pairs.push_back(Json::array({p, l}));
    Json j{{"points", inc.num_points()}, {"lines", inc.num_lines()}, {"incidence", std::move(pairs)}};
    if (!inc.point_labels.empty() || !inc.line_labels.empty())
        j["labels"] = Json{{"points", inc.point_labels}, {"lines", inc.line_labels}};
    return j;
}

IncidenceStructure incidence_from_json(const Json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("incidence")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    IncidenceStructure inc = IncidenceStructure::from_pairs(j.at("points").get<int>(),
                                                            j.at("lines").get<int>(), pairs);
    if (j.contains("labels")) {
        inc.point_labels = j.at("labels").at("points").get<std::vector<std::string>>();
        inc.line_labels = j.at("labels").at("lines").get<std::vector<std::string>>();
    }
    return inc;
}

Json perp_report_to_json(const PerpSystemReport& r) {
    Json fails = Json::array();
    for (const auto& f : r.failing_pairs) fails.push_back(Json{{"i", f.i}, {"j", f.j}, {"reason", f.reason}});
    return Json{{"line_count", r.line_count},
                {"bound", r.bound},
                {"all_nonsingular", r.all_nonsingular},
                {"pairwise_opposite", r.pairwise_opposite},
                {"pairwise_disjoint", r.pairwise_disjoint},
                {"is_partial_perp_system", r.is_partial_perp_system},
                {"is_maximal", r.is_maximal},
                {"failing_pairs", std::move(fails)}};
}

namespace {

Json checks_to_json(const std::vector<CheckLine>& checks) {
    Json obj = Json::object();
    for (const auto& c : checks) {
        if (c.detail.empty())
            obj[c.name] = c.pass;
        else
            obj[c.name] = Json{{"pass", c.pass}, {"detail", c.detail}};
    }
    return obj;
}

Json timings_to_json(const std::vector<std::pair<std::string, double>>& timings) {
    Json obj = Json::object();
    for (const auto& [name, ms] : timings) obj[name] = ms;
    return obj;
}

void render_checks(std::ostringstream& os, const std::vector<CheckLine>& checks) {
    for (const auto& c : checks) {
        os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
}

void render_summary(std::ostringstream& os, const std::vector<CheckLine>& checks, bool all_pass) {
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    if (all_pass)
        os << "all " << checks.size() << " checks passed\n";
    else
        os << failed << " of " << checks.size() << " checks FAILED\n";
}

void render_timings(std::ostringstream& os, const std::vector<std::pair<std::string, double>>& t) {
    os << "timings:\n";
    for (const auto& [name, ms] : t) os << "  " << name << ": " << ms << " ms\n";
}

} // namespace

Json report_to_json(const PipelineReport& r, bool with_timings) {
    Json j{{"schema_version", 1},
           {"command", "pipeline"},
           {"seed_index", r.seed_index},
           {"all_pass", r.all_pass}};
    j["counts"] = Json{{"F4", r.f4_lines.size()}, {"L", r.l_lines.size()},
                       {"F5", r.f5_lines.size()}, {"F6", r.f6_lines.size()},
                       {"F15", r.f15_lines.size()}, {"M21", r.m21.size()},
                       {"F10", r.f10_lines.size()}};
    j["stages"] = Json{{"F4", lineset_to_json(r.f4_lines)}, {"L", lineset_to_json(r.l_lines)},
                       {"F5", lineset_to_json(r.f5_lines)}, {"F6", lineset_to_json(r.f6_lines)},
                       {"F15", lineset_to_json(r.f15_lines)}, {"M21", lineset_to_json(r.m21)},
                       {"F10", lineset_to_json(r.f10_lines)}};
    Json family = Json::array();
    for (const Matrix& m : r.form_family_basis) family.push_back(matrix_to_json(m));
    j["grams"] = Json{{"M0", matrix_to_json(r.m0_gram)},
                      {"M15", matrix_to_json(r.m15_gram)},
                      {"family_basis", std::move(family)}};
    Json gens = Json::array();
    for (const Matrix& m : r.stabilizer_generators) gens.push_back(matrix_to_json(m));
    j["group"] = Json{{"generators", std::move(gens)},
                      {"order", r.group_order},
                      {"projective_order", r.projective_group_order},
                      {"relations",
                       Json{{"c_squared", r.relations.c_squared},
                            {"d_eighth", r.relations.d_eighth},
                            {"c_commutes_d4", r.relations.c_commutes_d4},
                            {"cd_fifth", r.relations.cd_fifth},
                            {"commutator_cubed", r.relations.commutator_cubed}}},
                      {"five_cycles", r.five_cycle_count},
                      {"faithful_image_order", r.faithful_image_order}};
    j["perp_system"] = perp_report_to_json(r.perp);
    j["complement"] = Json{{"covered_points", r.complement.covered_points},
                           {"complement_points", r.complement.complement_points},
                           {"solids", r.complement.solid_count},
                           {"meets_are_lines", r.complement.meets_are_lines},
                           {"three_solids_per_point", r.complement.three_solids_per_point}};
    j["recovery"] = Json{{"synthemes", r.syntheme_count},
                         {"spreads", r.spread_count},
                         {"qualifying", r.qualifying_spreads},
                         {"matches_f5", r.recovery_matches_f5}};
    j["quadrangle"] = Json{{"s", r.gq_s},
                           {"t", r.gq_t},
                           {"isomorphic_to_duad_syntheme", r.w2_isomorphic},
                           {"duad_consistent", r.w2_duad_consistent}};
    j["partial_geometry"] = Json{{"s", r.pg.s}, {"t", r.pg.t}, {"alpha", r.pg.alpha}};
    j["srg"] = Json{{"v", r.srg.v}, {"k", r.srg.k}, {"lambda", r.srg.lambda}, {"mu", r.srg.mu}};
    j["cited_not_verified"] = r.cited_not_verified;
    j["checks"] = checks_to_json(r.checks);
    if (with_timings) j["timings_ms"] = timings_to_json(r.timings_ms);
    return j;
}

Json report_to_json(const StageReport& r, bool with_timings) {
    Json j{{"schema_version", 1},
           {"command", "verify"},
           {"stage", r.id},
           {"all_pass", r.all_pass},
           {"checks", checks_to_json(r.checks)}};
    if (with_timings) j["timings_ms"] = timings_to_json(r.timings_ms);
    return j;
}

namespace {

Json witness_to_json(const PolarityWitness& w) {
    return Json{{"gram", matrix_to_json(w.sym)},
                {"type", to_string(w.type)},
                {"singular_points", w.singular_points},
                {"provenance", w.provenance}};
}

} // namespace

Json report_to_json(const PolarityReport& r, bool with_timings) {
    Json j{{"schema_version", 1},
           {"command", "polarity-search"},
           {"search_seed", r.search_seed},
           {"budget", r.budget},
           {"seed_index", r.seed_index},
           {"all_pass", r.all_pass},
           {"witnesses",
            Json{{"hyperbolic", witness_to_json(r.hyperbolic)},
                 {"elliptic", witness_to_json(r.elliptic)}}},
           {"candidates_tested", r.candidates_tested},
           {"used_random_fallback", r.used_random_fallback},
           {"verification",
            Json{{"hyperbolic", perp_report_to_json(r.hyperbolic_check)},
                 {"elliptic", perp_report_to_json(r.elliptic_check)}}},
           {"checks", checks_to_json(r.checks)}};
    if (with_timings) j["timings_ms"] = timings_to_json(r.timings_ms);
    return j;
}

std::string report_to_text(const PipelineReport& r, bool with_timings) {
    std::ostringstream os;
    os << "construction pipeline, seed index " << r.seed_index << "\n";
    os << "stage counts: F4=" << r.f4_lines.size() << " L=" << r.l_lines.size()
       << " F5=" << r.f5_lines.size() << " F6=" << r.f6_lines.size() << " F15=" << r.f15_lines.size()
       << " M21=" << r.m21.size() << "\n";
    os << "group: order " << r.group_order << ", projective " << r.projective_group_order
       << ", five-cycles " << r.five_cycle_count << "\n";
    os << "quadrangle (" << r.gq_s << "," << r.gq_t << "); partial geometry pg(" << r.pg.s << ","
       << r.pg.t << "," << r.pg.alpha << "); srg(" << r.srg.v << "," << r.srg.k << "," << r.srg.lambda
       << "," << r.srg.mu << ")\n";
    for (const std::string& s : r.cited_not_verified) os << "cited, not re-verified: " << s << "\n";
    render_checks(os, r.checks);
    render_summary(os, r.checks, r.all_pass);
    if (with_timings) render_timings(os, r.timings_ms);
    return os.str();
}

std::string report_to_text(const StageReport& r, bool with_timings) {
    std::ostringstream os;
    os << "stage " << r.id << " verification\n";
    render_checks(os, r.checks);
    render_summary(os, r.checks, r.all_pass);
    if (with_timings) render_timings(os, r.timings_ms);
    return os.str();
}

std::string report_to_text(const PolarityReport& r, bool with_timings) {
    std::ostringstream os;
    os << "polarity search: " << r.candidates_tested << " candidates tested"
       << (r.used_random_fallback ? " (random fallback used)" : "") << "\n";
    os << "hyperbolic witness (" << r.hyperbolic.singular_points
       << " singular points): " << to_string(r.hyperbolic.sym) << "\n";
    os << "  found in " << r.hyperbolic.provenance << "\n";
    os << "elliptic witness (" << r.elliptic.singular_points
       << " singular points): " << to_string(r.elliptic.sym) << "\n";
    os << "  found in " << r.elliptic.provenance << "\n";
    render_checks(os, r.checks);
    render_summary(os, r.checks, r.all_pass);
    if (with_timings) render_timings(os, r.timings_ms);
    return os.str();
}

} // namespace mathon
