#include "hombol/constructions.hpp"

#include "hombol/errors.hpp"
#include "hombol/identities.hpp"
#include "hombol/linear_map.hpp"

namespace hombol {

namespace {

void require_even(const Mat& m, const Grading& g, const char* what) {
    if (!is_even(m, g)) throw NotEven(std::string(what) + ": map is not even");
}

std::string first_failure(const CheckReport& report) {
    for (const AxiomVerdict& v : report.verdicts) {
        if (v.pass()) continue;
        std::string out = v.axiom + " fails at (";
        const std::vector<Index>& t = v.counterexamples.front().tuple;
        for (std::size_t p = 0; p < t.size(); ++p)
            out += (p ? "," : "") + std::to_string(t[p]);
        return out + ")";
    }
    return "";
}

}  // namespace

SuperAlgebra bol_from_right_alternative(const SuperAlgebra& a, const ScaleConvention& scale,
                                        JordanSign sign, HypothesisPolicy policy) {
    const Grading& g = a.grading();
    if (policy == HypothesisPolicy::enforce) {
        require_even(a.twist(), g, "bol_from_right_alternative");
        const CheckReport ralt = check_right_hom_alternative(a, RaltForm::both);
        if (!ralt.pass())
            throw NotRightAlternative("\"" + a.name() + "\" is not right alternative: " + first_failure(ralt));
        const CheckReport mult = check_multiplicative(a);
        if (!mult.pass())
            throw NotMultiplicative("twist of \"" + a.name() + "\" is not multiplicative: " + first_failure(mult));
    }

    const SuperAlgebra minus = supercommutator(a, scale);
    const SuperAlgebra plus = super_jordan(a, scale);

    TernaryStructure triple(g);
    for (Index i = 0; i < g.dim(); ++i)
        for (Index j = 0; j < g.dim(); ++j)
            for (Index l = 0; l < g.dim(); ++l) {
                const Rational s = parity_sign(g.degree(i) * (g.degree(j) + g.degree(l)));
                const Vec p = s * hom_jordan_associator(plus, g.basis(j), g.basis(l), g.basis(i), sign);
                for (Index k = 0; k < g.dim(); ++k)
                    if (p[k] != 0) triple.set(i, j, l, k, p[k]);
            }

    SuperAlgebra out(a.name() + "/bol", g);
    out.set_binary(minus.binary());
    out.set_ternary(std::move(triple));
    out.set_twist(map_power(a.twist(), 2));
    return out;
}

SuperAlgebra lie_sts_from_jordan(const SuperAlgebra& plus, const ScaleConvention& scale,
                                 HypothesisPolicy policy) {
    const Grading& g = plus.grading();
    if (policy == HypothesisPolicy::enforce) {
        require_even(plus.twist(), g, "lie_sts_from_jordan");
        const CheckReport comm = check_supercommutative(plus);
        if (!comm.pass())
            throw NotSupercommutative("\"" + plus.name() + "\" is not supercommutative: " + first_failure(comm));
        const CheckReport mult = check_multiplicative(plus);
        if (!mult.pass())
            throw NotMultiplicative("twist of \"" + plus.name() + "\" is not multiplicative: " + first_failure(mult));
    }

    const Rational factor = Rational(2) * scale.lambda() * scale.lambda();
    TernaryStructure triple(g);
    for (Index i = 0; i < g.dim(); ++i)
        for (Index j = 0; j < g.dim(); ++j)
            for (Index l = 0; l < g.dim(); ++l) {
                const Rational s = parity_sign(g.degree(i) * (g.degree(j) + g.degree(l)));
                const Vec p = factor * s * hom_jordan_associator(plus, g.basis(j), g.basis(l), g.basis(i));
                for (Index k = 0; k < g.dim(); ++k)
                    if (p[k] != 0) triple.set(i, j, l, k, p[k]);
            }

    SuperAlgebra out(plus.name() + "/lsts", g);
    out.set_ternary(std::move(triple));
    out.set_twist(map_power(plus.twist(), 2));
    return out;
}

Vec jordan_triple(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z) {
    const Grading& g = plus.grading();
    return jordan_triple(plus, x, y, z, degree_of(g, x), degree_of(g, y), degree_of(g, z));
}

Vec jordan_triple(const SuperAlgebra& plus, const Vec& x, const Vec& y, const Vec& z,
                  int dx, int dy, int dz) {
    const CheckReport comm = check_supercommutative(plus);
    if (!comm.pass())
        throw NotSupercommutative("\"" + plus.name() + "\" is not supercommutative: " + first_failure(comm));
    const BinaryStructure& b = plus.binary();
    const Mat alpha = plus.twist();
    return b.eval(b.eval(x, y), alpha * z) +
           parity_sign(dx * dy + dz * (dx + dy)) * b.eval(b.eval(z, y), alpha * x) -
           parity_sign(dx * dy) * b.eval(alpha * y, b.eval(x, z));
}

namespace {

// Product preservation only; the intertwining verdict is ignored here
// because the callers either have an identity twist or check commuting
// as a separate hypothesis.
void require_product_morphism(const Mat& beta, const SuperAlgebra& a) {
    CheckReport morph = check_hom_morphism(beta, a, a);
    for (const AxiomVerdict& v : morph.verdicts) {
        if (v.axiom == "MORPH-TWIST") continue;
        if (!v.pass())
            throw NotMorphism("map is not a self-morphism of \"" + a.name() + "\": " + first_failure(morph));
    }
}

}  // namespace

SuperAlgebra yau_twist_bts(const SuperAlgebra& a, const Mat& beta, HypothesisPolicy policy) {
    const Grading& g = a.grading();
    if (!a.twist_is_identity())
        throw UnexpectedTwist("Yau twisting starts from an untwisted structure; \"" + a.name() +
                              "\" already carries a twist");
    if (policy == HypothesisPolicy::enforce) {
        require_even(beta, g, "yau_twist_bts");
        require_product_morphism(beta, a);
    }
    SuperAlgebra out(a.name() + "/yau", g);
    if (a.has_binary()) out.set_binary(post_compose(a.binary(), beta));
    if (a.has_ternary()) out.set_ternary(post_compose(a.ternary(), map_power(beta, 2)));
    out.set_twist(beta);
    return out;
}

SuperAlgebra yau_twist_binary(const SuperAlgebra& a, const Mat& beta, HypothesisPolicy policy) {
    const Grading& g = a.grading();
    const BinaryStructure& b = a.binary();
    if (policy == HypothesisPolicy::enforce) {
        require_even(beta, g, "yau_twist_binary");
        for (Index i = 0; i < g.dim(); ++i)
            for (Index j = 0; j < g.dim(); ++j) {
                if (!equal(Vec(beta * b.product(i, j)), b.eval(beta.col(i), beta.col(j))))
                    throw NotMorphism("map is not a product morphism of \"" + a.name() + "\" at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    SuperAlgebra out(a.name() + "/yau2", g);
    out.set_binary(post_compose(b, beta));
    if (a.has_ternary()) out.set_ternary(a.ternary());
    out.set_twist(compose(beta, a.twist()));
    return out;
}

SuperAlgebra beta_n_twist(const SuperAlgebra& a, const Mat& beta, unsigned n, HypothesisPolicy policy) {
    const Grading& g = a.grading();
    if (policy == HypothesisPolicy::enforce) {
        require_even(beta, g, "beta_n_twist");
        require_product_morphism(beta, a);
        if (!commute(beta, a.twist()))
            throw NotCommuting("map does not commute with the twist of \"" + a.name() + "\"");
    }
    const Mat bn = map_power(beta, n);
    SuperAlgebra out(a.name() + "/pow" + std::to_string(n), g);
    if (a.has_binary()) out.set_binary(post_compose(a.binary(), bn));
    if (a.has_ternary()) out.set_ternary(post_compose(a.ternary(), map_power(beta, 2 * n)));
    out.set_twist(compose(bn, a.twist()));
    return out;
}

SuperAlgebra nth_derived(const SuperAlgebra& a, unsigned n) {
    if (n > 20) throw InvalidParam("derived level too large");
    const unsigned long long p = (1ull << n) - 1;         // binary exponent 2^n - 1
    const unsigned long long q = (1ull << (n + 1)) - 2;   // ternary exponent 2^{n+1} - 2
    const Mat alpha = a.twist();
    SuperAlgebra out(a.name() + "/derived" + std::to_string(n), a.grading());
    if (a.has_binary()) out.set_binary(post_compose(a.binary(), map_power(alpha, static_cast<unsigned>(p))));
    if (a.has_ternary()) out.set_ternary(post_compose(a.ternary(), map_power(alpha, static_cast<unsigned>(q))));
    out.set_twist(map_power(alpha, 1u << n));
    return out;
}

CheckReport check_hom_morphism(const Mat& f, const SuperAlgebra& src, const SuperAlgebra& dst) {
    if (!(src.grading() == dst.grading()))
        throw DimensionMismatch("check_hom_morphism: source and target gradings differ");
    const Grading& g = src.grading();
    if (f.rows() != g.dim() || f.cols() != g.dim())
        throw DimensionMismatch("check_hom_morphism: map size mismatch");
    require_even(f, g, "check_hom_morphism");
    if (src.has_binary() != dst.has_binary() || src.has_ternary() != dst.has_ternary())
        throw DimensionMismatch("check_hom_morphism: structure presence differs between source and target");

    CheckReport report{"morphism", src.name(), {}};
    const Index n = g.dim();
    if (src.has_binary()) {
        AxiomVerdict v{"MORPH-BINARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                const Vec lhs = f * src.binary().product(i, j);
                const Vec rhs = dst.binary().eval(f.col(i), f.col(j));
                if (!equal(lhs, rhs)) v.counterexamples.push_back({{i, j}, lhs - rhs});
            }
        report.verdicts.push_back(std::move(v));
    }
    if (src.has_ternary()) {
        AxiomVerdict v{"MORPH-TERNARY", {}};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index l = 0; l < n; ++l) {
                    const Vec lhs = f * src.ternary().product(i, j, l);
                    const Vec rhs = dst.ternary().eval(f.col(i), f.col(j), f.col(l));
                    if (!equal(lhs, rhs)) v.counterexamples.push_back({{i, j, l}, lhs - rhs});
                }
        report.verdicts.push_back(std::move(v));
    }
    {
        AxiomVerdict v{"MORPH-TWIST", {}};
        const Mat lhs = compose(f, src.twist());
        const Mat rhs = compose(dst.twist(), f);
        for (Index j = 0; j < n; ++j) {
            if (!equal(Vec(lhs.col(j)), Vec(rhs.col(j))))
                v.counterexamples.push_back({{j}, lhs.col(j) - rhs.col(j)});
        }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

}  // namespace hombol
