#pragma once

// The odd part Λ[l^1, l^2, ...] and the looping maps between the two parities.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "evenops.hpp"
#include "exterior.hpp"
#include "integer.hpp"
#include "intpoly.hpp"
#include "kbu.hpp"
#include "models.hpp"
#include "setzz.hpp"
#include "symcore.hpp"

namespace kops {

class OddOp {
public:
    OddOp(Exterior ext, int trunc) : ext_(std::move(ext)), trunc_(trunc)
    {
        if (trunc_ < 1) throw InvalidArgument("truncation level must be positive");
        if (static_cast<int>(ext_.max_index()) > trunc_)
            throw TruncationExceeded("l^" + std::to_string(ext_.max_index()) + " above level " + std::to_string(trunc_));
    }

    /// l^k; zero above the truncation.
    static OddOp generator(int k, int trunc)
    {
        if (k < 1) throw IndexOutOfRange("l^k needs k >= 1");
        return OddOp(k > trunc ? Exterior{} : Exterior::generator(static_cast<std::uint32_t>(k)), trunc);
    }

    const Exterior& ext() const { return ext_; }
    int trunc() const { return trunc_; }

    friend OddOp operator+(const OddOp& a, const OddOp& b) { return OddOp(a.ext_ + b.ext_, a.level(b)); }
    friend OddOp operator-(const OddOp& a, const OddOp& b) { return OddOp(a.ext_ - b.ext_, a.level(b)); }
    friend OddOp operator*(const Int& c, const OddOp& a) { return OddOp(c * a.ext_, a.trunc_); }
    /// Wedge product.
    friend OddOp operator*(const OddOp& a, const OddOp& b) { return OddOp(a.ext_ * b.ext_, a.level(b)); }

    bool operator==(const OddOp&) const = default;

private:
    int level(const OddOp& o) const
    {
        if (o.trunc_ != trunc_) throw TruncationMismatch("levels " + std::to_string(trunc_) + " and " + std::to_string(o.trunc_));
        return trunc_;
    }

    Exterior ext_;
    int trunc_;
};

inline std::string to_text(const OddOp& x) { return x.ext().to_text("l"); }
inline nlohmann::json to_json(const OddOp& x)
{
    nlohmann::json j = x.ext().to_json("l");
    j["trunc"] = x.trunc();
    return j;
}

/// An even and an odd component over the same truncation and window.
struct GradedOp {
    EvenOp even;
    OddOp odd;

    GradedOp(EvenOp e, OddOp o) : even(std::move(e)), odd(std::move(o))
    {
        if (even.trunc() != odd.trunc()) throw TruncationMismatch("graded parts use different levels");
    }
};

/// iota_n: 1 ⊗ lambda^1 iota + iota ⊗ 1 in even degree, l^1 in odd degree.
inline GradedOp iota(int n, int trunc, Window window)
{
    if (n % 2 == 0) return GradedOp(identity_op(trunc, window), OddOp(Exterior{}, trunc));
    return GradedOp(EvenOp(trunc, window), OddOp::generator(1, trunc));
}

/// P^L_k(1, -1, ..., (-1)^{k-1}; lambda^1 iota, ..., lambda^k iota).
inline IntPoly plin_signed(int k)
{
    return substitute(left_linearise(universal_pk(k)), [](Var v) {
        if (v.family == Family::x) return IntPoly(sign_power(static_cast<int>(v.index) - 1));
        return lam(v.index);
    });
}

/// sum_i f_i(0) * (coefficient of lambda^k iota in x_i) l^k.
inline OddOp loop_even(const EvenOp& r)
{
    if (op_cozero(r) != 0) throw NotAugmented("co-zero is " + op_cozero(r).str());
    Exterior out;
    for (const auto& [f, x] : r.summands()) {
        const Int c = f(0);
        if (c == 0) continue;
        for (const auto& [m, v] : x.poly().terms())
            if (m.degree() == 1) out.add({m.factors().front().var.index}, c * v);
    }
    return OddOp(std::move(out), r.trunc());
}

/// l^k -> 1 ⊗ P^L_k(1, -1, ...; lambda's); longer words -> 0.
inline EvenOp loop_odd(const OddOp& x, Window window)
{
    if (x.ext().unit_part() != 0) throw NotAugmented("odd operation has unit part " + x.ext().unit_part().str());
    IntPoly p;
    for (const auto& [w, c] : x.ext().terms())
        if (w.size() == 1) p += plin_signed(static_cast<int>(w.front())) * c;
    if (p.is_zero()) return EvenOp(x.trunc(), window);
    return EvenOp::tensor(FnZZ::constant(1), KBUElem(p, x.trunc()), window);
}

/// Coefficient of lambda_{ij} in P_{i,j}: l^i∘l^j = c_{ij} l^{ij}.
inline Int odd_generator_coefficient(int i, int j)
{
    return universal_pij(i, j).coefficient(Monomial::of(var(Family::lambda, static_cast<std::uint32_t>(i * j))));
}

/// x∘y for y a combination of generators; the left argument acts as an
/// algebra map.
inline OddOp compose_odd(const OddOp& x, const OddOp& y)
{
    if (x.trunc() != y.trunc()) throw TruncationMismatch("compose_odd operands differ in level");
    if (y.ext().unit_part() != 0) throw NotReduced("right operand has unit part " + y.ext().unit_part().str());
    for (const auto& [w, c] : y.ext().terms())
        if (w.size() > 1) throw ParityMismatch("right operand has an even-length exterior word");
    const int n = x.trunc();
    auto image = [&](std::uint32_t i) {
        Exterior out;
        for (const auto& [w, c] : y.ext().terms()) {
            const int j = static_cast<int>(w.front());
            const int k = static_cast<int>(i) * j;
            Int coeff = odd_generator_coefficient(static_cast<int>(i), j);
            if (coeff == 0) continue;
            if (k > n) throw TruncationExceeded("l^" + std::to_string(i) + "∘l^" + std::to_string(j) + " needs level " + std::to_string(k));
            out.add({static_cast<std::uint32_t>(k)}, coeff * c);
        }
        return out;
    };
    return OddOp(x.ext().map(image), n);
}

// Reports

struct AxiomResult {
    std::string axiom;
    std::string instance;
    bool pass = true;
    std::string witness;
};

struct Report {
    std::vector<AxiomResult> entries;

    void add(std::string axiom, std::string instance, bool pass, std::string witness = {})
    {
        entries.push_back({std::move(axiom), std::move(instance), pass, pass ? std::string{} : std::move(witness)});
    }
    void merge(const Report& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }

    bool ok() const
    {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::size_t count(const std::string& axiom) const
    {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.axiom == axiom;
        return n;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& e : entries) n += !e.pass;
        return n;
    }

    /// Per-axiom counts and every failing entry.
    nlohmann::json to_json() const
    {
        std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
        nlohmann::json failed = nlohmann::json::array();
        for (const auto& e : entries) {
            auto& [total, bad] = tally[e.axiom];
            ++total;
            if (!e.pass) {
                ++bad;
                failed.push_back({{"axiom", e.axiom}, {"instance", e.instance}, {"pass", false}, {"witness", e.witness}});
            }
        }
        nlohmann::json axioms = nlohmann::json::array();
        for (const auto& [name, t] : tally) axioms.push_back({{"axiom", name}, {"instances", t.first}, {"failures", t.second}});
        return {{"ok", ok()}, {"axioms", axioms}, {"failures", failed}};
    }
};

namespace detail {

/// Left factors of the generator corpus: chi_d for |d| <= W, and 1.
inline std::vector<FnZZ> corpus_functions(Window w)
{
    std::vector<FnZZ> out;
    for (std::int64_t d = -w.radius; d <= w.radius; ++d) out.push_back(FnZZ::chi(d));
    out.push_back(FnZZ::constant(1));
    return out;
}

/// sum r_[1](a) r_[2](b s) from a two-fold tensor entry, in A[s]/(s^2):
/// slot-1 constants stay, lambda^k(b s) = s * P^L_k image at b, products of
/// two slot-1 classes vanish.
inline IntPoly double_loop_pair(const IntPoly& p, const SuspendedModel& susp, const std::vector<IntPoly>& left_series,
                                const IntPoly& b)
{
    const LambdaRingModel& model = susp.base();
    const ModelRing ring{&model};
    std::map<std::uint32_t, IntPoly> loop_image;
    IntPoly total;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Factor> left;
        std::vector<Factor> right;
        for (const auto& f : m.factors()) (f.var.slot == 0 ? left : right).push_back(f);
        if (right.size() > 1 || (right.size() == 1 && right.front().exp != 1)) continue;
        IntPoly a_part = evaluate(IntPoly::term(Monomial(left), c), [&](Var v) { return left_series.at(v.index); }, ring);
        if (right.empty()) {
            total += a_part;
            continue;
        }
        const std::uint32_t k = right.front().var.index;
        auto it = loop_image.find(k);
        if (it == loop_image.end()) {
            IntPoly img = evaluate(plin_signed(static_cast<int>(k)),
                                   [&](Var v) { return model.lambda(static_cast<int>(v.index), b); }, ring);
            it = loop_image.emplace(k, std::move(img)).first;
        }
        total += model.mul(a_part, it->second) * SuspendedModel::s();
    }
    return susp.reduce(total);
}

} // namespace detail

/// Axiom (2) twice looped, on one instance: r(a * b * s) in A[s]/(s^2)
/// against sum r_[1](a) (Omega^2 r_[2])(b) s, for b with eps(b) = 0.
inline bool check_comult_loop_instance(const EvenOp& r, const EvenOpTensor& comult, std::shared_ptr<const LambdaRingModel> model,
                                       const IntPoly& a, const IntPoly& b_raw, std::string* witness = nullptr)
{
    const SuspendedModel susp(model);
    const IntPoly b = model->reduce(b_raw - model->reduce(IntPoly(model->augmentation(b_raw))));
    const IntPoly lhs = act(r, susp, susp.reduce(a * b * SuspendedModel::s()));

    const Int ea = model->augmentation(a);
    IntPoly rhs;
    auto it = comult.coeffs.find({static_cast<std::int64_t>(ea), 0});
    if (it != comult.coeffs.end()) {
        const auto series = model->lambda_series(model->reduce(a - model->reduce(IntPoly(ea))),
                                                 static_cast<int>(it->second.max_index(Family::lambda)));
        rhs = detail::double_loop_pair(it->second, susp, series, b);
    }
    if (lhs != rhs && witness) *witness = "lhs " + to_text(lhs) + ", rhs " + to_text(rhs);
    return lhs == rhs;
}

/// Looping axioms (1)-(4) at level N on the generator corpus.
inline Report check_looping_axioms(int n, Window w, std::uint64_t seed = 1, int comult_instances = 60)
{
    Report rep;
    const auto fns = detail::corpus_functions(w);
    auto gen = [&](const FnZZ& f, int k) { return EvenOp::tensor(f, KBUElem::generator(k, n), w); };

    // (1) Omega vanishes on products of augmented generators and lands in primitives.
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (const auto& f : {FnZZ::chi(0), FnZZ::constant(1), FnZZ::chi(1)}) {
                EvenOp prod = gen(f, i) * gen(FnZZ::constant(1), j);
                OddOp loop = loop_even(prod);
                rep.add("loop kills decomposables", f.to_string() + "⊗L" + std::to_string(i) + " * 1⊗L" + std::to_string(j), loop.ext().is_zero(),
                        to_text(loop));
            }
    for (const auto& f : fns)
        for (int k = 1; k <= n; ++k) {
            OddOp loop = loop_even(gen(f, k));
            bool linear = true;
            for (const auto& [word, c] : loop.ext().terms()) linear = linear && word.size() == 1;
            rep.add("loop lands in primitives", "primitive " + f.to_string() + "⊗L" + std::to_string(k), linear, to_text(loop));
        }

    // (3) Omega(r∘s) = Omega r ∘ Omega s.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i * j <= n; ++j)
            for (const auto& f : fns)
                for (const auto& g : fns) {
                    EvenOp r = gen(f, i);
                    EvenOp s = gen(g, j);
                    OddOp lhs = loop_even(compose(r, s));
                    OddOp rhs = compose_odd(loop_even(r), loop_even(s));
                    rep.add("loop of composite", "(" + f.to_string() + "⊗L" + std::to_string(i) + ")∘(" + g.to_string() + "⊗L" + std::to_string(j) + ")",
                            lhs == rhs, to_text(lhs) + " vs " + to_text(rhs));
                }

    // (4) Omega(iota_0) = iota_1.
    {
        OddOp loop = loop_even(identity_op(n, w));
        rep.add("loop of identity", "identity", loop == OddOp::generator(1, n), to_text(loop));
        EvenOp back = loop_odd(OddOp::generator(1, n), w);
        rep.add("loop of identity", "loop of l1", back == EvenOp::tensor(FnZZ::constant(1), KBUElem::generator(1, n), w), to_text(back));
    }

    // (2) through the action on A[s]/(s^2).
    std::mt19937_64 rng(seed);
    const std::vector<std::string> names{"int", "sphere", "cp:2", "split:2", "nil:2:3", "coi:3"};
    int done = 0;
    for (int attempt = 0; done < comult_instances && attempt < 20 * comult_instances; ++attempt) {
        const auto& f = fns[rng() % fns.size()];
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        auto model = get_model(names[rng() % names.size()]);
        const IntPoly a = model->sample(rng);
        const IntPoly b = model->sample(rng);
        if (!w.contains(model->augmentation(a))) continue;
        const EvenOp r = gen(f, k);
        std::string witness;
        bool pass = check_comult_loop_instance(r, op_comult(r), model, a, b, &witness);
        rep.add("loop of co-multiplication", f.to_string() + "⊗L" + std::to_string(k) + " on " + model->name() + " a = " + to_text(a) + ", b = " + to_text(b), pass,
                witness);
        ++done;
    }
    return rep;
}

/// Omega(f ⊗ lambda^p) = f(0) Omega(1 ⊗ lambda^p) and
/// Omega^2(f ⊗ lambda^p) = f(0) ⊗ P^L_p(1, -1, ...; lambda's).
inline Report main_relations_check(int p_max, int n, Window w)
{
    if (p_max > n) throw TruncationExceeded("p_max above the level");
    Report rep;
    for (int p = 1; p <= p_max; ++p)
        for (const auto& f : detail::corpus_functions(w)) {
            const EvenOp r = EvenOp::tensor(f, KBUElem::generator(p, n), w);
            const OddOp once = loop_even(r);
            const OddOp expected_once = f(0) * loop_even(EvenOp::tensor(FnZZ::constant(1), KBUElem::generator(p, n), w));
            const std::string inst = f.to_string() + "⊗L" + std::to_string(p);
            rep.add("loop", inst, once == expected_once, to_text(once) + " vs " + to_text(expected_once));

            const EvenOp twice = loop_odd(once, w);
            // P^L_p straight from P_p: keep terms with a single x factor.
            IntPoly pl;
            for (const auto& [m, c] : universal_pk(p).terms()) {
                if (m.degree_if([](Var v) { return v.family == Family::x; }) != 1) continue;
                IntPoly t(c);
                for (const auto& fac : m.factors())
                    t *= fac.var.family == Family::x ? IntPoly(sign_power(static_cast<int>(fac.var.index) - 1)) : pow(lam(fac.var.index), fac.exp);
                pl += t;
            }
            const EvenOp expected_twice = EvenOp::tensor(FnZZ::constant(f(0)), KBUElem(pl, n), w);
            rep.add("double loop", inst, twice == expected_twice, to_text(twice) + " vs " + to_text(expected_twice));
        }
    return rep;
}

/// Primitive and indecomposable data for one parity.
struct AugmentationView {
    std::string part;
    int trunc = 1;
    std::vector<std::string> primitive_basis;
    std::vector<std::string> indecomposable_basis;
};

inline bool in_ip(const EvenOp& r) { return op_cozero(r) == 0; }
inline bool in_ip(const OddOp& x) { return x.ext().unit_part() == 0; }

/// Delta+ r = 1 ⊗ r + r ⊗ 1 on the window square.
inline bool is_primitive(const EvenOp& r)
{
    const Window w = r.window();
    EvenOpTensor expected{r.trunc(), w, {}};
    for (const auto& [f, x] : r.summands())
        for (std::int64_t i = -w.radius; i <= w.radius; ++i)
            for (std::int64_t j = -w.radius; j <= w.radius; ++j) {
                expected.add(i, j, relabel_slots(x.poly(), {1}) * f(j));
                expected.add(i, j, x.poly() * f(i));
            }
    return op_coadd(r) == expected;
}

/// l^k are primitive, so exactly the linear combinations of generators are.
inline bool is_primitive(const OddOp& x)
{
    for (const auto& [w, c] : x.ext().terms())
        if (w.size() != 1) return false;
    return true;
}

/// Coordinates of r in IP/(IP)^2 on the basis lambda^1..lambda^N (as
/// chi_0 ⊗ lambda^k cosets); equal to the loop coordinates.
inline std::vector<Int> indecomposable_coords(const EvenOp& r)
{
    const OddOp loop = loop_even(r);
    std::vector<Int> out(static_cast<std::size_t>(r.trunc()), 0);
    for (const auto& [w, c] : loop.ext().terms()) out.at(w.front() - 1) = c;
    return out;
}

inline std::vector<EvenOp> even_primitive_basis(int n, Window w)
{
    std::vector<EvenOp> out{EvenOp::tensor(FnZZ::identity(), KBUElem::one(n), w)};
    for (int k = 1; k <= n; ++k) out.push_back(EvenOp::tensor(FnZZ::constant(1), KBUElem(newton_psi(k), n), w));
    return out;
}

inline AugmentationView augmentation_view(const std::string& part, int n, Window w)
{
    AugmentationView v{part, n, {}, {}};
    if (part == "even") {
        for (const auto& r : even_primitive_basis(n, w)) {
            if (!is_primitive(r)) throw Error("primitive basis element " + to_text(r) + " failed the coproduct check");
            std::string s;
            for (const auto& [f, x] : r.summands()) s = f.to_string() + "⊗(" + to_text(x.poly()) + ")";
            v.primitive_basis.push_back(s);
        }
        for (int k = 1; k <= n; ++k) v.indecomposable_basis.push_back("chi(0)⊗L" + std::to_string(k));
    } else if (part == "odd") {
        for (int k = 1; k <= n; ++k) {
            v.primitive_basis.push_back("l" + std::to_string(k));
            v.indecomposable_basis.push_back("l" + std::to_string(k));
        }
    } else {
        throw InvalidArgument("part must be even or odd");
    }
    return v;
}

inline nlohmann::json to_json(const AugmentationView& v)
{
    return {{"part", v.part}, {"trunc", v.trunc}, {"primitive_basis", v.primitive_basis}, {"indecomposable_basis", v.indecomposable_basis}};
}

} // namespace kops
