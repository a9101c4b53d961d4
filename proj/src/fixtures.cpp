#include "hombol/fixtures.hpp"

#include <random>

#include "hombol/errors.hpp"

namespace hombol {
namespace fixtures {

namespace {

Grading grading_3_1() { return Grading({0, 0, 1}, {"i", "j", "k"}); }
Grading grading_4_1() { return Grading({0, 1, 1}, {"i", "j", "k"}); }

SuperAlgebra example_3_1_impl(bool printed_signs) {
    const Grading g = grading_3_1();
    SuperAlgebra a(printed_signs ? "example-3.1-printed" : "example-3.1", g);
    BinaryStructure b(g);
    // [i,j]=j, [j,i]=-j, [i,k]=k, [k,i]=+-k, [k,k]=j
    b.set(0, 1, 1, 1);
    b.set(1, 0, 1, -1);
    b.set(0, 2, 2, 1);
    b.set(2, 0, 2, printed_signs ? 1 : -1);
    b.set(2, 2, 1, 1);
    TernaryStructure t(g);
    // {i,j,i}=-j, {i,k,i}=-k, {j,i,i}=j, {k,i,i}=k
    t.set(0, 1, 0, 1, -1);
    t.set(0, 2, 0, 2, -1);
    t.set(1, 0, 0, 1, 1);
    t.set(2, 0, 0, 2, 1);
    a.set_binary(std::move(b));
    a.set_ternary(std::move(t));
    return a;
}

}  // namespace

SuperAlgebra example_3_1() { return example_3_1_impl(false); }
SuperAlgebra example_3_1_printed() { return example_3_1_impl(true); }

SuperAlgebra example_4_1_star() {
    const Grading g = grading_4_1();
    SuperAlgebra a("example-4.1-star", g);
    BinaryStructure b(g);
    // i*j=k, j*i=k, j*k=2i, k*j=4i
    b.set(0, 1, 2, 1);
    b.set(1, 0, 2, 1);
    b.set(1, 2, 0, 2);
    b.set(2, 1, 0, 4);
    a.set_binary(std::move(b));
    return a;
}

namespace {

SuperAlgebra example_4_1_tables(const std::string& name, const Rational& a_param) {
    const Grading g = grading_4_1();
    const Rational a2 = a_param * a_param;
    SuperAlgebra out(name, g);
    BinaryStructure b(g);
    // [j,k] = [k,j] = 6a i
    b.set(1, 2, 0, Rational(6) * a_param);
    b.set(2, 1, 0, Rational(6) * a_param);
    TernaryStructure t(g);
    // {i,j,j}=4a^2 i, {j,i,j}=-4a^2 i, {j,j,i}=-8a^2 i,
    // {j,j,k}=-8a^2 k, {j,k,j}=4a^2 k, {k,j,j}=4a^2 k
    t.set(0, 1, 1, 0, Rational(4) * a2);
    t.set(1, 0, 1, 0, Rational(-4) * a2);
    t.set(1, 1, 0, 0, Rational(-8) * a2);
    t.set(1, 1, 2, 2, Rational(-8) * a2);
    t.set(1, 2, 1, 2, Rational(4) * a2);
    t.set(2, 1, 1, 2, Rational(4) * a2);
    out.set_binary(std::move(b));
    out.set_ternary(std::move(t));
    return out;
}

}  // namespace

SuperAlgebra example_4_1_bol() { return example_4_1_tables("example-4.1-bol", 1); }

Mat example_4_1_beta(const Rational& a, const Rational& b) {
    if (a == 0) throw InvalidParam("a must be nonzero");
    Mat m = Mat::Zero(3, 3);
    m(0, 0) = a;   // beta(i) = a i
    m(1, 1) = 1;   // beta(j) = j + b k
    m(2, 1) = b;
    m(2, 2) = a;   // beta(k) = a k
    return m;
}

SuperAlgebra example_4_1_hom_bol(const Rational& a, const Rational& b) {
    SuperAlgebra out = example_4_1_tables("example-4.1-hom-bol", a);
    out.set_twist(example_4_1_beta(a, b));
    return out;
}

SuperAlgebra zero_algebra(const std::vector<int>& degrees, bool with_binary, bool with_ternary) {
    Grading g(degrees);
    SuperAlgebra a("zero", g);
    if (with_binary) a.set_binary(BinaryStructure(g));
    if (with_ternary) a.set_ternary(TernaryStructure(g));
    return a;
}

namespace {

struct Slot {
    bool ternary;
    Index i, j, l, k;  // l unused for binary slots
};

std::vector<Slot> compatible_slots(const SuperAlgebra& a) {
    std::vector<Slot> slots;
    const Grading& g = a.grading();
    const Index n = g.dim();
    if (a.has_binary()) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index k = 0; k < n; ++k)
                    if (g.degree(k) == (g.degree(i) + g.degree(j)) % 2)
                        slots.push_back({false, i, j, 0, k});
    }
    if (a.has_ternary()) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index l = 0; l < n; ++l)
                    for (Index k = 0; k < n; ++k)
                        if (g.degree(k) == (g.degree(i) + g.degree(j) + g.degree(l)) % 2)
                            slots.push_back({true, i, j, l, k});
    }
    return slots;
}

}  // namespace

SuperAlgebra mutate(const SuperAlgebra& a, std::uint64_t seed) {
    const std::vector<Slot> slots = compatible_slots(a);
    if (slots.empty()) throw InvalidParam("algebra has no grading-compatible slot to mutate");
    std::mt19937_64 rng(seed);
    const Slot& slot = slots[static_cast<std::size_t>(rng() % slots.size())];

    static const int nums[] = {1, 2, 3, -1, -2, 5, -3, 7};
    static const int dens[] = {1, 1, 1, 1, 2, 3, 1, 2};
    const std::size_t pick = static_cast<std::size_t>(rng() % 8);
    Rational fresh(nums[pick], dens[pick]);

    SuperAlgebra out = a.with_name(a.name() + "#mut" + std::to_string(seed));
    if (slot.ternary) {
        if (a.ternary().t(slot.i, slot.j, slot.l, slot.k) == fresh) fresh = fresh + 1;
        out.ternary_mut().set(slot.i, slot.j, slot.l, slot.k, fresh);
    } else {
        if (a.binary().c(slot.i, slot.j, slot.k) == fresh) fresh = fresh + 1;
        out.binary_mut().set(slot.i, slot.j, slot.k, fresh);
    }
    return out;
}

std::vector<std::string> catalogue() {
    return {"example-3.1",     "example-3.1-printed", "example-4.1-star", "example-4.1-bol",
            "example-4.1-beta", "example-4.1-hom-bol", "zero"};
}

bool is_morphism_fixture(const std::string& id) { return id == "example-4.1-beta"; }

namespace {

Rational param(const std::map<std::string, std::string>& params, const std::string& key,
               const Rational& fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    return parse_rational(it->second);
}

}  // namespace

SuperAlgebra make(const std::string& id, const std::map<std::string, std::string>& params) {
    if (id == "example-3.1") return example_3_1();
    if (id == "example-3.1-printed") return example_3_1_printed();
    if (id == "example-4.1-star") return example_4_1_star();
    if (id == "example-4.1-bol") return example_4_1_bol();
    if (id == "example-4.1-hom-bol")
        return example_4_1_hom_bol(param(params, "a", 1), param(params, "b", 0));
    if (id == "zero") {
        std::vector<int> degrees;
        auto it = params.find("degrees");
        if (it != params.end()) {
            for (char c : it->second) {
                if (c == ',') continue;
                if (c != '0' && c != '1') throw InvalidParam("degrees must be a string of 0s and 1s");
                degrees.push_back(c - '0');
            }
        } else {
            degrees = {0, 1, 1};
        }
        return zero_algebra(degrees);
    }
    throw InvalidParam("unknown fixture \"" + id + "\"");
}

Mat make_morphism(const std::string& id, const std::map<std::string, std::string>& params) {
    if (id == "example-4.1-beta")
        return example_4_1_beta(param(params, "a", 1), param(params, "b", 0));
    throw InvalidParam("unknown morphism fixture \"" + id + "\"");
}

}  // namespace fixtures
}  // namespace hombol
