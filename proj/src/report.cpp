#include "dlq/report.hpp"

namespace dlq::report {

json word_json(const std::vector<int>& word0) {
    json out = json::array();
    for (int i : word0) out.push_back(i + 1);
    return out;
}

std::vector<int> word_from_json(const json& j, int rank) {
    if (!j.is_array()) throw InvalidInput("expected an array of simple indices");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput("invalid simple index");
        int i = v.get<int>();
        if (i < 1 || i > rank) throw InvalidInput("invalid simple index");
        out.push_back(i - 1);
    }
    return out;
}

json subset_json(SimpleSubset s) {
    json out = json::array();
    for (int i : s.indices()) out.push_back(i + 1);
    return out;
}

SimpleSubset subset_from_json(const json& j, int rank) {
    SimpleSubset out;
    for (int i : word_from_json(j, rank)) out.add(i);
    return out;
}

namespace {
const char* status_name(PieceStatus s) {
    switch (s) {
        case PieceStatus::Empty:
            return "empty";
        case PieceStatus::Case1:
            return "case1";
        case PieceStatus::Case2:
            return "case2";
        case PieceStatus::Unclassified:
            return "unclassified";
    }
    return "?";
}

json cells_json(const std::vector<CellSummary>& cells) {
    json out = json::array();
    for (const CellSummary& c : cells) {
        json jc;
        jc["y_word"] = word_json(c.y_word);
        jc["word"] = word_json(c.word);
        json mask = json::array();
        for (auto b : c.mask) mask.push_back(static_cast<int>(b));
        jc["mask"] = mask;
        jc["n_gamma"] = c.n_gamma;
        jc["m_gamma"] = c.m_gamma;
        jc["product_word"] = word_json(c.product_word);
        out.push_back(std::move(jc));
    }
    return out;
}
}  // namespace

json piece_json(const RootSystem&, const PieceClassification& pc, bool nonempty) {
    json out;
    out["x_word"] = word_json(reduced_word(pc.x));
    out["length"] = pc.x.length();
    out["nonempty"] = nonempty;
    out["status"] = status_name(pc.status);
    if (pc.v) out["v_word"] = word_json(reduced_word(*pc.v));
    if (pc.status != PieceStatus::Empty) out["K"] = subset_json(pc.K);
    if (pc.e) out["e"] = *pc.e;
    if (pc.s) out["s"] = *pc.s + 1;
    if (pc.wPrime) out["w_prime_word"] = word_json(reduced_word(*pc.wPrime));
    if (pc.case2_also) {
        out["case2_also"] = true;
        out["case2_also_s"] = *pc.case2_also_s + 1;
    }
    if (!pc.note.empty()) out["note"] = pc.note;
    if (!pc.cells.empty()) out["cells"] = cells_json(pc.cells);
    return out;
}

json run_pieces(const RootSystem& rs, SimpleSubset I, const WeylElt& w, SimpleSubset J) {
    json out = json::array();
    for (const auto& [x, nonempty] : enumerate_pieces(rs, I, w, J))
        out.push_back(piece_json(rs, classify_piece(rs, I, w, J, x), nonempty));
    return out;
}

json run_classify(const RootSystem& rs, SimpleSubset I, const WeylElt& w, SimpleSubset J,
                  const WeylElt& x) {
    bool nonempty = piece_nonempty(I, w, J, x);
    return piece_json(rs, classify_piece(rs, I, w, J, x), nonempty);
}

json run_coxeter(const RootSystem& rs, const WeylElt& w, SimpleSubset J) {
    CoxeterReport rep = coxeter_report(rs, w, J);
    json out;
    out["x_word"] = word_json(reduced_word(rep.x));
    out["v_word"] = word_json(reduced_word(rep.v));
    out["gm_exponent"] = rep.gm_exponent;
    return out;
}

json run_deodhar(const RootSystem& rs, const std::vector<int>& wWord, const WeylElt& x,
                 const std::optional<WeylElt>& wPrime) {
    json out;
    out["reduced_word"] = word_json(wWord);
    json cells = json::array();
    for (const Subexpression& sub : enumerate_cells_word(rs, wWord, x, wPrime)) {
        json jc;
        json mask = json::array();
        for (auto b : sub.mask) mask.push_back(static_cast<int>(b));
        jc["mask"] = mask;
        jc["n_gamma"] = sub.n_gamma;
        jc["m_gamma"] = sub.m_gamma;
        cells.push_back(std::move(jc));
    }
    out["cells"] = cells;
    out["mass_polynomial"] = deodhar_mass_word(rs, wWord, x).coeffs();
    return out;
}

json run_chain(const RootSystem& rs, const ChainSpec& spec, SimpleSubset J) {
    std::vector<ChainCheck> checks = validate_chain(rs, spec, J);
    json out;
    out["valid"] = chain_valid(checks);
    json jchecks = json::array();
    for (const ChainCheck& c : checks) {
        json jc;
        jc["index"] = c.index;
        jc["name"] = c.name;
        jc["ok"] = c.ok;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.required) jc["informational"] = true;
        jchecks.push_back(std::move(jc));
    }
    out["checks"] = jchecks;
    if (chain_valid(checks)) {
        ChainSummary sum = chain_summary(rs, spec, J);
        json jsum;
        jsum["d"] = sum.d;
        jsum["e"] = sum.e;
        json vwords = json::array();
        for (const WeylElt& v : sum.v_parts) vwords.push_back(word_json(reduced_word(v)));
        jsum["v_words"] = vwords;
        jsum["v_product_word"] = word_json(reduced_word(sum.v_product));
        out["summary"] = jsum;
    }
    return out;
}

json graded_module_json(const GradedModule& m) {
    json out = json::array();
    for (const GMEntry& e : m.entries()) {
        json je;
        je["degree"] = e.degree;
        je["q_exponent"] = e.eig;
        je["character"] = e.chi.to_string();
        out.push_back(std::move(je));
    }
    return out;
}

json run_cohom_bn(int n, BnCoefficient coeff) {
    GradedModule table = bn_table(n, coeff);
    json out;
    out["n"] = n;
    out["coefficient"] = coeff == BnCoefficient::Trivial ? "triv" : "St";
    out["table"] = graded_module_json(table);
    out["hc_restriction"] = graded_module_json(hc_restrict_module(table));
    return out;
}

}  // namespace dlq::report
