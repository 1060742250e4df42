#include "dlq/decomp.hpp"

namespace dlq {

namespace {

void check_pair_preconditions(const RootSystem& rs, SimpleSubset I, const WeylElt& w,
                              SimpleSubset J) {
    if (!is_I_reduced(w, I, Side::Left)) throw PreconditionError("w not I-reduced");
    if (!normalizes(w, I, true)) throw PreconditionError("wF does not normalize I");
    if (!(apply_F_subset(rs, J) == J)) throw PreconditionError("J not F-stable");
}

// s fixes Phi_I pointwise.
bool fixes_parabolic_roots(const RootSystem& rs, int s, SimpleSubset I) {
    for (RootIndex r : rs.parabolic_roots(I))
        if (rs.reflect(s, r) != r) return false;
    return true;
}

// ˣ(W_I s) ∩ W_J = ∅: no y in W_I with x·y·s·x^{-1} in W_J.
bool conjugated_coset_misses_WJ(const RootSystem& rs, const WeylElt& x, SimpleSubset I, int s,
                                SimpleSubset J) {
    WeylElt xinv = x.inverse();
    WeylElt se = WeylElt::simple(rs, s);
    for (const WeylElt& y : parabolic_elements(rs, I))
        if (in_parabolic_subgroup(x * y * se * xinv, J)) return false;
    return true;
}

struct Case2Hit {
    int s;
    WeylElt wPrime;
    WeylElt v;
};

std::optional<Case2Hit> find_case2(const RootSystem& rs, SimpleSubset I, const WeylElt& w,
                                   SimpleSubset J, const WeylElt& x, const WeylElt& fxInv) {
    for (int s : left_descents(w)) {  // ascending, so the smallest valid s wins
        WeylElt wPrime = WeylElt::simple(rs, s) * w;
        WeylElt v = x * wPrime * fxInv;
        if (!in_parabolic_subgroup(v, J)) continue;
        if (v.length() != wPrime.length()) continue;
        if (!fixes_parabolic_roots(rs, s, I)) continue;
        if (!conjugated_coset_misses_WJ(rs, x, I, s, J)) continue;
        return Case2Hit{s, std::move(wPrime), std::move(v)};
    }
    return std::nullopt;
}

std::vector<CellSummary> collect_witness_cells(const RootSystem& rs, SimpleSubset I,
                                               const WeylElt& w, SimpleSubset J, const WeylElt& x,
                                               const WeylElt& fxInv) {
    std::vector<CellSummary> out;
    std::vector<int> wWord = reduced_word(w);
    for (const WeylElt& y : parabolic_elements(rs, I)) {
        std::vector<int> word = reduced_word(y);
        word.insert(word.end(), wWord.begin(), wWord.end());
        for (const Subexpression& sub : enumerate_cells_word(rs, word, x, std::nullopt)) {
            if (!in_parabolic_subgroup(x * sub.product * fxInv, J)) continue;
            CellSummary cell;
            cell.y_word = reduced_word(y);
            cell.word = sub.word;
            cell.mask = sub.mask;
            cell.n_gamma = sub.n_gamma;
            cell.m_gamma = sub.m_gamma;
            cell.product_word = reduced_word(sub.product);
            out.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<WeylElt, bool>> enumerate_pieces(const RootSystem& rs, SimpleSubset I,
                                                       const WeylElt& w, SimpleSubset J) {
    check_pair_preconditions(rs, I, w, J);
    std::vector<std::pair<WeylElt, bool>> out;
    for (const WeylElt& x : double_coset_min_reps(rs, J, I))
        out.emplace_back(x, piece_nonempty(I, w, J, x));
    return out;
}

PieceClassification classify_piece(const RootSystem& rs, SimpleSubset I, const WeylElt& w,
                                   SimpleSubset J, const WeylElt& x) {
    check_pair_preconditions(rs, I, w, J);
    if (!is_double_reduced(x, J, I)) throw PreconditionError("x not J-reduced-I");

    PieceClassification pc;
    pc.x = x;
    pc.K = K_of(x, J, I);

    if (!piece_nonempty(I, w, J, x)) {
        pc.status = PieceStatus::Empty;
        return pc;
    }

    WeylElt fxInv = apply_F(x).inverse();
    WeylElt v1 = x * w * fxInv;
    if (in_parabolic_subgroup(v1, J)) {
        if (is_I_reduced(v1, pc.K, Side::Left)) {
            pc.status = PieceStatus::Case1;
            pc.v = v1;
            pc.e = case1_affine_dim(rs, x, w, J);
            // Both hypothesis sets holding at once is provably impossible
            // (Case 2 (iii) at y = e contradicts Case 1); evaluated anyway.
            if (auto hit = find_case2(rs, I, w, J, x, fxInv)) {
                pc.case2_also = true;
                pc.case2_also_s = hit->s;
            }
            return pc;
        }
        pc.status = PieceStatus::Unclassified;
        pc.note = "x w F(x)^-1 lies in W_J but is not W_K-reduced";
        pc.cells = collect_witness_cells(rs, I, w, J, x, fxInv);
        return pc;
    }

    if (auto hit = find_case2(rs, I, w, J, x, fxInv)) {
        pc.status = PieceStatus::Case2;
        pc.s = hit->s;
        pc.wPrime = hit->wPrime;
        pc.v = hit->v;
        return pc;
    }

    pc.status = PieceStatus::Unclassified;
    pc.cells = collect_witness_cells(rs, I, w, J, x, fxInv);
    return pc;
}

CoxeterReport coxeter_report(const RootSystem& rs, const WeylElt& w, SimpleSubset J) {
    if (!rs.split()) throw PreconditionError("twist not split");
    if (w.length() != rs.rank() || !(support(w) == SimpleSubset::full(rs.rank())))
        throw PreconditionError("w not Coxeter");

    WeylElt x = longest_element(rs, J) * longest_element(rs, SimpleSubset::full(rs.rank()));
    WeylElt xinv = x.inverse();

    const Subexpression* unique = nullptr;
    std::vector<Subexpression> cells = enumerate_cells(w, x, std::nullopt);
    for (const Subexpression& sub : cells) {
        if (!in_parabolic_subgroup(x * sub.product * xinv, J)) continue;
        if (unique) throw std::logic_error("coxeter piece admits several cells");
        unique = &sub;
    }
    if (!unique) throw std::logic_error("coxeter piece has no cell");

    CoxeterReport rep;
    rep.x = x;
    rep.v = x * unique->product * xinv;
    rep.gm_exponent = unique->m_gamma;
    return rep;
}

namespace {
void push_check(std::vector<ChainCheck>& out, int index, std::string name, bool ok,
                std::string detail = {}, bool required = true) {
    out.push_back(ChainCheck{index, std::move(name), ok, std::move(detail), required});
}

// {w(alpha_a) : a in from} = {alpha_b : b in to} as positive simple roots.
bool conjugates_simple_set(const RootSystem& rs, const WeylElt& w, SimpleSubset from,
                           SimpleSubset to) {
    SimpleSubset image;
    for (int a : from.indices()) {
        RootIndex img = w.act(rs.simple_root(a));
        int b = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (rs.simple_root(j) == img) b = j;
        if (b < 0 || !to.contains(b)) return false;
        image.add(b);
    }
    return image == to;
}
}  // namespace

std::vector<ChainCheck> validate_chain(const RootSystem& rs, const ChainSpec& spec,
                                       SimpleSubset J) {
    std::vector<ChainCheck> out;
    const int r = static_cast<int>(spec.terms.size());
    if (r == 0) {
        push_check(out, 0, "chain nonempty", false);
        return out;
    }
    if (static_cast<int>(spec.xs.size()) != r) {
        push_check(out, 0, "x tuple size", false, "expected one x per term");
        return out;
    }
    if (!(apply_F_subset(rs, J) == J)) {
        push_check(out, 0, "J F-stable", false);
        return out;
    }

    bool structural = true;
    for (int i = 0; i < r; ++i) {
        const ChainTerm& term = spec.terms[i];
        const int shown = i + 1;
        SimpleSubset nextI =
            i + 1 < r ? spec.terms[i + 1].I : apply_F_subset(rs, spec.terms[0].I);

        bool reduced = is_I_reduced(term.w, term.I, Side::Left);
        push_check(out, shown, "w_i I_i-reduced", reduced);
        bool conj = conjugates_simple_set(rs, term.w, nextI, term.I);
        push_check(out, shown, "^{w_i} I_{i+1} = I_i", conj);
        structural = structural && reduced && conj;

        if (term.gamma) {
            bool inRange = *term.gamma >= 0 && *term.gamma < rs.rank();
            bool descent = inRange && is_left_descent(term.w, *term.gamma);
            push_check(out, shown, "l(gamma_i w_i) = l(w_i) - 1", descent);
            structural = structural && descent;
        }

        bool xred = is_double_reduced(spec.xs[i], J, term.I);
        push_check(out, shown, "x_i J-reduced-I_i", xred);
        structural = structural && xred;
    }

    bool sameLength = true;
    for (int i = 1; i < r; ++i)
        if (spec.xs[i].length() != spec.xs[0].length()) sameLength = false;
    push_check(out, 0, "x tuple lengths equal", sameLength);
    structural = structural && sameLength;
    if (!structural) return out;

    for (int i = 0; i < r; ++i) {
        const ChainTerm& term = spec.terms[i];
        const int shown = i + 1;
        WeylElt xNext = i + 1 < r ? spec.xs[i + 1] : apply_F(spec.xs[0]);
        SimpleSubset nextI =
            i + 1 < r ? spec.terms[i + 1].I : apply_F_subset(rs, spec.terms[0].I);
        SimpleSubset K = K_of(spec.xs[i], J, term.I);

        if (!term.gamma) {
            WeylElt v = spec.xs[i] * term.w * xNext.inverse();
            bool inWJ = in_parabolic_subgroup(v, J);
            push_check(out, shown, "v_i in W_J", inWJ);
            push_check(out, shown, "v_i W_K-reduced", inWJ && is_I_reduced(v, K, Side::Left));
            if (inWJ) {
                bool kcomp = conjugates_simple_set(rs, v, K_of(xNext, J, nextI), K);
                push_check(out, shown, "^{v_i} K_{x_{i+1}} = K_{x_i}", kcomp, {}, false);
            }
        } else {
            int s = *term.gamma;
            WeylElt z = WeylElt::simple(rs, s) * term.w;
            WeylElt v = spec.xs[i] * z * xNext.inverse();
            bool inWJ = in_parabolic_subgroup(v, J) && v.length() == z.length();
            push_check(out, shown, "(i) v_i in W_J with l(v_i) = l(z_i)", inWJ);
            push_check(out, shown, "(ii) gamma_i fixes Phi_I pointwise",
                       fixes_parabolic_roots(rs, s, term.I));
            push_check(out, shown, "(iii) ^{x_i}(W_I gamma_i) misses W_J",
                       conjugated_coset_misses_WJ(rs, spec.xs[i], term.I, s, J));
            if (inWJ) {
                bool kcomp = conjugates_simple_set(rs, v, K_of(xNext, J, nextI), K);
                push_check(out, shown, "^{v_i} K_{x_{i+1}} = K_{x_i}", kcomp, {}, false);
            }
        }
    }
    return out;
}

bool chain_valid(const std::vector<ChainCheck>& checks) {
    for (const ChainCheck& c : checks)
        if (c.required && !c.ok) return false;
    return true;
}

ChainSummary chain_summary(const RootSystem& rs, const ChainSpec& spec, SimpleSubset J) {
    if (!chain_valid(validate_chain(rs, spec, J))) throw PreconditionError("invalid chain");

    ChainSummary sum;
    const int r = static_cast<int>(spec.terms.size());
    sum.v_product = WeylElt::identity(rs);
    for (int i = 0; i < r; ++i) {
        const ChainTerm& term = spec.terms[i];
        WeylElt xNext = i + 1 < r ? spec.xs[i + 1] : apply_F(spec.xs[0]);
        WeylElt z = term.gamma ? WeylElt::simple(rs, *term.gamma) * term.w : term.w;
        if (term.gamma) ++sum.d;
        sum.e += case1_affine_dim(rs, spec.xs[i], z, J);
        WeylElt v = spec.xs[i] * z * xNext.inverse();
        sum.v_parts.push_back(v);
        sum.v_product = sum.v_product * v;
    }
    return sum;
}

}  // namespace dlq
