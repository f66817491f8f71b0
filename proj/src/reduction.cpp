#include "keller/reduction.hpp"

namespace keller {

PolyMap blow_up(const PolyMap& f) {
    if (f.ring().contains("t"))
        throw std::invalid_argument("blow_up: input already uses the parameter variable name 't'");
    const std::size_t n = f.dimension();
    for (std::size_t i = 0; i < n; ++i)
        if (!f.component(i).constant_term().is_zero())
            throw std::invalid_argument("blow_up requires F(0) = 0 (component " + std::to_string(i + 1) +
                                        " has a constant term)");
    Ring big = f.ring().extended({"t"});
    Poly t = Poly::variable(big, n, GaussianRational(1));
    std::vector<Poly> comps;
    comps.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Poly acc(big);
        Poly t_power = Poly::constant(big, GaussianRational(1));
        const std::uint64_t deg = f.component(i).total_degree();
        for (std::uint64_t j = 1; j <= deg; ++j) {
            Poly layer = homogeneous_component(f.component(i), j);
            if (!layer.is_zero()) acc += t_power * embed_in(layer, big);
            t_power *= t;
        }
        comps.push_back(std::move(acc));
    }
    comps.push_back(std::move(t));
    return PolyMap(big, std::move(comps));
}

PolyMap restrict_last(const PolyMap& f, const GaussianRational& value) {
    const std::size_t m = f.dimension();
    if (m < 2) throw std::invalid_argument("restrict_last needs at least two variables");
    std::vector<std::string> small_names(f.ring().names().begin(), f.ring().names().end() - 1);
    Ring small(std::move(small_names));
    std::vector<Poly> images;
    images.reserve(m);
    for (std::size_t v = 0; v + 1 < m; ++v) images.push_back(Poly::variable(small, v, GaussianRational(1)));
    images.push_back(Poly::constant(small, value));
    std::vector<Poly> comps;
    comps.reserve(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) comps.push_back(substitute(f.component(i), images));
    return PolyMap(small, std::move(comps));
}

namespace {

// Positions are fixed throughout the elimination: the parameter T sits at
// index t_pos = n, added variables are appended after it.
struct TDegrees {
    std::vector<std::uint32_t> deg;  // per component; t-component slot unused
    std::uint64_t measure = 0;
};

TDegrees t_degrees(const PolyMap& cur, std::size_t t_pos) {
    TDegrees out;
    out.deg.resize(cur.dimension(), 0);
    for (std::size_t i = 0; i < cur.dimension(); ++i) {
        if (i == t_pos) continue;
        out.deg[i] = max_exponent_of(cur.component(i), t_pos);
        if (out.deg[i] > 1) out.measure += out.deg[i] - 1;
    }
    return out;
}

void check_elimination_preconditions(const PolyMap& ft, std::size_t t_pos) {
    const std::size_t m = ft.dimension();
    if (m < 2) throw std::invalid_argument("eliminate_t_powers: need at least one X variable plus T");
    if (ft.component(t_pos) != Poly::variable(ft.ring(), t_pos, GaussianRational(1)))
        throw std::invalid_argument("eliminate_t_powers: last component must be exactly the variable T");
    for (std::size_t i = 0; i < m; ++i) {
        if (i == t_pos) continue;
        Poly free_part = coefficient_in_var(ft.component(i), t_pos, 0);
        if (free_part != Poly::variable(ft.ring(), i, GaussianRational(1)))
            throw std::invalid_argument("eliminate_t_powers: T-free part of component " +
                                        std::to_string(i + 1) + " must be exactly X_" +
                                        std::to_string(i + 1));
    }
}

}  // namespace

EliminationResult eliminate_t_powers(const PolyMap& ft) {
    const std::size_t n = ft.dimension() - 1;  // non-T inputs
    const std::size_t t_pos = n;
    check_elimination_preconditions(ft, t_pos);

    PolyMap cur = ft;
    Automorphism h = Automorphism::identity(ft.ring());
    Automorphism r = Automorphism::identity(ft.ring());
    std::vector<std::uint64_t> measures;
    std::size_t added = 0;

    while (true) {
        TDegrees td = t_degrees(cur, t_pos);
        measures.push_back(td.measure);
        if (td.measure == 0) break;

        // Highest T-power first; ties broken by lowest component index.
        std::size_t target = 0;
        std::uint32_t k = 0;
        for (std::size_t i = 0; i < cur.dimension(); ++i) {
            if (i == t_pos) continue;
            if (td.deg[i] > k) {
                k = td.deg[i];
                target = i;
            }
        }

        // cur.component(target) = X_target + sum_j t^j S_j; take the top slice.
        Poly top_slice = coefficient_in_var(cur.component(target), t_pos, k);

        const std::string name = "w" + std::to_string(added + 1);
        cur = stable_extend(cur, std::vector<std::string>{name});
        h = h.extended({name});
        r = r.extended({name});
        const Ring& big = cur.ring();
        const std::size_t M = big.size();
        const std::size_t w_pos = M - 1;

        // Preimage change: the fresh coordinate absorbs t * (top slice).
        std::vector<Poly> phi_shifts(M, Poly(big));
        phi_shifts[w_pos] =
            -(Poly::variable(big, t_pos, GaussianRational(1)) * embed_in(top_slice, big));
        Automorphism phi = Automorphism::triangular(big, std::move(phi_shifts));

        // Image change: Y_target <- Y_target - t^(k-1) * Y_w.  Triangular
        // only in reversed coordinate order, so conjugate by the reversal.
        Automorphism rev = Automorphism::reversal(big);
        std::vector<Poly> psi_shifts(M, Poly(big));
        {
            const std::size_t rev_target = M - 1 - target;
            const std::size_t rev_t = M - 1 - t_pos;
            const std::size_t rev_w = M - 1 - w_pos;
            Poly shift = Poly::variable(big, rev_w, GaussianRational(-1));
            for (std::uint32_t e = 0; e + 1 < k; ++e)
                shift *= Poly::variable(big, rev_t, GaussianRational(1));
            psi_shifts[rev_target] = std::move(shift);
        }
        Automorphism psi = Automorphism::composition(
            big, {rev, Automorphism::triangular(big, std::move(psi_shifts)), rev});

        cur = compose(psi.as_polymap(), compose(cur, phi.inverse().as_polymap()));
        h = Automorphism::composition(big, {phi, h});
        r = Automorphism::composition(big, {psi, r});
        ++added;
    }

    // Present the result with T last: permute (X.., t, w..) -> (X.., w.., t).
    const Ring& big = cur.ring();
    const std::size_t M = big.size();
    std::vector<std::size_t> perm(M);  // perm[p] = source position of target slot p
    for (std::size_t p = 0; p < n; ++p) perm[p] = p;
    for (std::size_t p = n; p + 1 < M; ++p) perm[p] = p + 1;
    perm[M - 1] = t_pos;

    std::vector<std::string> presented_names(M);
    for (std::size_t p = 0; p < M; ++p) presented_names[p] = big.name(perm[p]);
    Ring presented_ring(std::move(presented_names));
    std::vector<std::optional<std::size_t>> index_map(M);
    for (std::size_t p = 0; p < M; ++p) index_map[perm[p]] = p;

    std::vector<Poly> presented;
    presented.reserve(M);
    for (std::size_t p = 0; p < M; ++p)
        presented.push_back(map_ring(cur.component(perm[p]), presented_ring, index_map));
    PolyMap result(presented_ring, std::move(presented));

    Automorphism s = Automorphism::permutation(big, perm);
    EquivalenceWitness witness{Automorphism::composition(big, {s, h}),
                               Automorphism::composition(big, {s, r}), M, M};

    // Extract G from X_i - t*G_i and sanity-check the shape.
    const std::size_t t_last = M - 1;
    std::vector<std::string> small_names(presented_ring.names().begin(), presented_ring.names().end() - 1);
    Ring small(std::move(small_names));
    std::vector<Poly> g_comps;
    g_comps.reserve(M - 1);
    std::vector<std::optional<std::size_t>> drop_t(M);
    for (std::size_t v = 0; v + 1 < M; ++v) drop_t[v] = v;
    for (std::size_t i = 0; i + 1 < M; ++i) {
        const Poly& comp = result.component(i);
        if (max_exponent_of(comp, t_last) > 1 ||
            coefficient_in_var(comp, t_last, 0) != Poly::variable(presented_ring, i, GaussianRational(1)))
            throw internal_error("eliminate_t_powers: result is not in the X_i - t*G_i form");
        g_comps.push_back(map_ring(-coefficient_in_var(comp, t_last, 1), small, drop_t));
    }
    PolyMap extracted(small, std::move(g_comps));

    return EliminationResult{std::move(result), std::move(witness), added, std::move(measures),
                             std::move(extracted)};
}

ReductionReport to_nilpotent_form(const PolyMap& f,
                                  const std::optional<std::vector<GaussianRational>>& base_point) {
    KellerResult kc = is_keller(f);
    if (!kc.keller)
        throw std::invalid_argument("to_nilpotent_form requires a Keller map (det JF constant nonzero)");
    const std::size_t n = f.dimension();
    std::vector<GaussianRational> base =
        base_point.value_or(std::vector<GaussianRational>(n, GaussianRational(0)));
    if (base.size() != n) throw std::invalid_argument("base point arity mismatch");

    // Normalize: send the base point and its image to the origin and absorb
    // the full linear part.  Because det JF is constant, this also makes the
    // Jacobian constant exactly 1.
    std::vector<GaussianRational> image = evaluate_map(f, base);
    PolyMatrix jf = jacobian(f);
    std::vector<std::vector<GaussianRational>> lin(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lin[i][j] = evaluate(jf.at(i, j), base);

    std::vector<GaussianRational> neg_base, neg_image;
    for (const auto& v : base) neg_base.push_back(-v);
    for (const auto& v : image) neg_image.push_back(-v);

    Automorphism h_norm = Automorphism::composition(
        f.ring(),
        {Automorphism::linear(f.ring(), lin), Automorphism::translation(f.ring(), neg_base)});
    Automorphism r_norm = Automorphism::translation(f.ring(), neg_image);
    PolyMap normalized = compose(r_norm.as_polymap(), compose(f, h_norm.inverse().as_polymap()));

    ReductionReport report{normalized, {}, 0, {}, ""};
    {
        ChainLink link{"normalize", f, normalized, EquivalenceWitness{h_norm, r_norm, n, n}, 0, false};
        link.replay_ok = verify_witness(*link.witness, normalized, f);
        if (!link.replay_ok) throw internal_error("to_nilpotent_form: normalization witness failed to replay");
        report.chain.push_back(std::move(link));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!normalized.component(i).constant_term().is_zero() ||
            homogeneous_component(normalized.component(i), 1) !=
                Poly::variable(normalized.ring(), i, GaussianRational(1)))
            throw internal_error("to_nilpotent_form: normalization did not reach Id + higher-order form");
    }

    PolyMap ft = blow_up(normalized);
    {
        ChainLink link{"blow-up", normalized, ft, std::nullopt, 1, false};
        link.replay_ok = (blow_up(normalized) == ft);
        report.chain.push_back(std::move(link));
    }

    EliminationResult elim = eliminate_t_powers(ft);
    {
        ChainLink link{"eliminate", ft, elim.result, elim.witness, elim.added, false};
        link.replay_ok = verify_witness(elim.witness, elim.result, stable_extend(ft, elim.added));
        if (!link.replay_ok) throw internal_error("to_nilpotent_form: elimination witness failed to replay");
        report.chain.push_back(std::move(link));
    }

    PolyMap nil = elim.extracted;
    {
        // Reading N off X_i - t*G_i is exactly the inverse of the bridge
        // construction; replay by rebuilding it.
        ChainLink link{"extract", elim.result, nil, std::nullopt, 0, false};
        link.replay_ok = (bridge(nil) == elim.result);
        if (!link.replay_ok) throw internal_error("to_nilpotent_form: extraction replay failed");
        report.chain.push_back(std::move(link));
    }

    NilpotencyResult nr = is_nilpotent(nil);
    if (!nr.nilpotent)
        throw internal_error("to_nilpotent_form: extracted map is not nilpotent (first nonzero trace at power " +
                             std::to_string(nr.first_nonzero_power) + ")");

    report.nilpotent_part = nil;
    report.dimensions_added = 1 + elim.added;
    report.measures = elim.measures;
    report.note =
        "preimage-count genericity at the base point is assumed, not checked; the Jacobian "
        "constant was normalized to 1 by absorbing the linear part at the base point";
    return report;
}

}  // namespace keller
