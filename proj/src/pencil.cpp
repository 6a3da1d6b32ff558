#include "aomoto/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "aomoto/numtheory.hpp"
#include "aomoto/rational.hpp"

namespace aomoto {

using nlohmann::json;

int QuasiFiberStructure::fiber_of_component(int comp) const {
    for (std::size_t i = 0; i < fibers.size(); ++i)
        for (const auto& [c, m] : fibers[i].components)
            if (c == comp) return static_cast<int>(i);
    return -1;
}

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw ParseError("pencil document: " + what);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) fail("unknown key '" + it.key() + "'");
    }
}

} // namespace

QuasiFiberStructure parse_pencil(const WeakCombinatorics& w, const json& doc) {
    if (!doc.is_object()) fail("expected a top-level object");
    check_keys(doc, {"meta", "curve", "degree", "index", "fibers",
                     "base_points", "twists"});
    QuasiFiberStructure q;
    if (doc.contains("meta")) q.meta = doc["meta"];
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        fail("missing integer 'degree'");
    q.degree = doc["degree"].get<std::int64_t>();
    q.index = 1;
    if (doc.contains("index")) {
        if (!doc["index"].is_number_integer()) fail("'index' must be integer");
        q.index = doc["index"].get<std::int64_t>();
    }
    if (!doc.contains("fibers") || !doc["fibers"].is_array())
        fail("missing 'fibers' list");
    for (const json& fj : doc["fibers"]) {
        check_keys(fj, {"components", "residual"});
        Fiber f;
        if (!fj.contains("components") || !fj["components"].is_array())
            fail("fiber missing 'components'");
        for (const json& cj : fj["components"]) {
            check_keys(cj, {"id", "m"});
            if (!cj.contains("id") || !cj["id"].is_string())
                fail("fiber component missing 'id'");
            std::string id = cj["id"].get<std::string>();
            int comp = w.component_index(id);
            if (comp < 0) fail("unknown component '" + id + "'");
            std::int64_t m = 1;
            if (cj.contains("m")) m = cj["m"].get<std::int64_t>();
            if (m <= 0) fail("component multiplicity must be positive");
            f.components.push_back({comp, m});
        }
        if (fj.contains("residual")) {
            check_keys(fj["residual"], {"m", "degree"});
            if (fj["residual"].contains("m"))
                f.residual_m = fj["residual"]["m"].get<std::int64_t>();
            if (fj["residual"].contains("degree"))
                f.residual_degree = fj["residual"]["degree"].get<std::int64_t>();
        }
        q.fibers.push_back(std::move(f));
    }
    if (doc.contains("base_points")) {
        if (!doc["base_points"].is_array()) fail("'base_points' must be a list");
        for (const json& bj : doc["base_points"]) {
            if (!bj.is_string()) fail("'base_points' entries must be ids");
            int ix = w.point_index(bj.get<std::string>());
            if (ix < 0) fail("unknown base point '" + bj.get<std::string>() + "'");
            q.base_points.push_back(ix);
        }
    }
    if (doc.contains("twists")) {
        if (!doc["twists"].is_object()) fail("'twists' must map ids to weights");
        for (auto it = doc["twists"].begin(); it != doc["twists"].end(); ++it) {
            int comp = w.component_index(it.key());
            if (comp < 0) fail("twist on unknown component '" + it.key() + "'");
            q.twists[comp] = it.value().get<std::int64_t>();
        }
    }
    return q;
}

QuasiFiberStructure parse_pencil_text(const WeakCombinatorics& w,
                                      const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed pencil document: ") + e.what());
    }
    return parse_pencil(w, doc);
}

json serialize_pencil(const WeakCombinatorics& w, const QuasiFiberStructure& q) {
    json doc = json::object();
    if (!q.meta.is_null()) doc["meta"] = q.meta;
    doc["degree"] = q.degree;
    doc["index"] = q.index;
    doc["fibers"] = json::array();
    for (const Fiber& f : q.fibers) {
        json fj;
        fj["components"] = json::array();
        for (const auto& [c, m] : f.components)
            fj["components"].push_back({{"id", w.components[c].id}, {"m", m}});
        fj["residual"] = {{"m", f.residual_m}, {"degree", f.residual_degree}};
        doc["fibers"].push_back(std::move(fj));
    }
    doc["base_points"] = json::array();
    for (int ix : q.base_points) doc["base_points"].push_back(w.points[ix].id);
    if (!q.twists.empty()) {
        json tw = json::object();
        for (const auto& [c, nu] : q.twists) tw[w.components[c].id] = nu;
        doc["twists"] = tw;
    }
    return doc;
}

namespace {

// Combinatorial part of mu_P(delta, G_j): fiber components weighted by
// their multiplicities. The residual contribution is not visible in W.
std::int64_t fiber_multiplicity(const WeakCombinatorics& w,
                                const QuasiFiberStructure& q, int point,
                                int branch, int fiber) {
    std::int64_t s = 0;
    for (const auto& [c, m] : q.fibers[fiber].components)
        s += m * w.points[point].branch_to_component(branch, c);
    return s;
}

} // namespace

StructureReport validate_structure(const WeakCombinatorics& w,
                                   const QuasiFiberStructure& q) {
    StructureReport rep;
    auto err = [&](const std::string& s) { rep.validation.errors.push_back(s); };
    auto warn = [&](const std::string& s) { rep.validation.warnings.push_back(s); };

    // fibers partition the component set
    std::vector<int> fm(w.components.size(), -1);
    for (std::size_t i = 0; i < q.fibers.size(); ++i)
        for (const auto& [c, m] : q.fibers[i].components) {
            if (fm[c] != -1)
                err("component '" + w.components[c].id + "' listed in two fibers");
            fm[c] = static_cast<int>(i);
        }
    for (std::size_t c = 0; c < w.components.size(); ++c)
        if (fm[c] < 0)
            err("component '" + w.components[c].id + "' not covered by any fiber");
    if (!rep.validation.errors.empty()) return rep;

    if (q.index < 1) err("index must be >= 1");
    for (std::size_t i = 0; i < q.fibers.size(); ++i) {
        const Fiber& f = q.fibers[i];
        std::ostringstream tag;
        tag << "fiber " << (i + 1);
        std::int64_t deg = f.residual_m * f.residual_degree;
        std::int64_t g = 0;
        for (const auto& [c, m] : f.components) {
            deg += m * w.components[c].degree;
            g = std::gcd(g, m);
        }
        if (deg != q.degree) {
            std::ostringstream os;
            os << tag.str() << ": member degree " << deg
               << " does not match pencil degree " << q.degree;
            err(os.str());
        }
        if ((f.residual_m == 0) != (f.residual_degree == 0))
            err(tag.str() + ": residual multiplicity is zero exactly when its "
                            "degree is zero");
        if (g != 1)
            warn(tag.str() + ": component multiplicities share a factor " +
                 std::to_string(g) +
                 " (the associated family drops rank in characteristics "
                 "dividing it)");
        if (q.index > 1 && f.residual_m > 0 && f.residual_m % q.index != 0)
            err(tag.str() + ": index must divide the residual multiplicity");
    }

    // base/non-base classification: a point is base exactly when branches
    // of at least two distinct fibers pass through it.
    std::set<int> declared(q.base_points.begin(), q.base_points.end());
    for (std::size_t pt_ix = 0; pt_ix < w.points.size(); ++pt_ix) {
        const SingularPoint& pt = w.points[pt_ix];
        std::set<int> fibers_here;
        for (const Branch& b : pt.branches) fibers_here.insert(fm[b.component]);
        bool is_base = fibers_here.size() >= 2;
        bool is_declared = declared.count(static_cast<int>(pt_ix)) > 0;
        if (is_base && !is_declared)
            err("point '" + pt.id + "' meets several fibers but is not listed "
                                    "as a base point");
        if (!is_base && is_declared)
            err("point '" + pt.id + "' is declared base but all branches lie "
                                    "in one fiber");
        if (!is_base) continue;

        // mu_delta: for every branch the weighted multiplicity against any
        // other member must be one common value; residual factors may absorb
        // slack in multiples of their multiplicity.
        for (std::size_t b = 0; b < pt.branches.size(); ++b) {
            int own = fm[pt.branches[b].component];
            std::int64_t mu_delta = 0;
            for (std::size_t j = 0; j < q.fibers.size(); ++j) {
                if (static_cast<int>(j) == own) continue;
                mu_delta = std::max(mu_delta,
                                    fiber_multiplicity(w, q, static_cast<int>(pt_ix),
                                                       static_cast<int>(b),
                                                       static_cast<int>(j)));
            }
            for (std::size_t j = 0; j < q.fibers.size(); ++j) {
                if (static_cast<int>(j) == own) continue;
                std::int64_t comb = fiber_multiplicity(
                    w, q, static_cast<int>(pt_ix), static_cast<int>(b),
                    static_cast<int>(j));
                std::int64_t slack = mu_delta - comb;
                const std::int64_t rm = q.fibers[j].residual_m;
                bool bad = rm == 0 ? slack != 0 : (slack < 0 || slack % rm != 0);
                if (bad) {
                    std::ostringstream os;
                    os << "inconsistent mu_delta at point '" << pt.id
                       << "', branch '" << pt.branches[b].id << "': member "
                       << (j + 1) << " meets it with multiplicity " << comb
                       << " but the common value is " << mu_delta;
                    err(os.str());
                }
            }
            rep.profile.mu_delta[{static_cast<int>(pt_ix), static_cast<int>(b)}] =
                mu_delta;
        }
    }
    return rep;
}

OneForm associated_one_form(const WeakCombinatorics& w,
                            const QuasiFiberStructure& q,
                            const std::vector<std::int64_t>& alpha,
                            std::int64_t p) {
    if (alpha.size() != q.fibers.size())
        throw std::invalid_argument("associated_one_form: one coefficient per fiber");
    OneForm f;
    f.p = p;
    f.coeffs.assign(w.components.size(), 0);
    for (std::size_t i = 0; i < q.fibers.size(); ++i)
        for (const auto& [c, m] : q.fibers[i].components)
            f.coeffs[c] = mod_reduce(m * alpha[i], p);
    return f;
}

FiberedBound fibered_lower_bound(const WeakCombinatorics& w,
                                 const QuasiFiberStructure& q,
                                 const std::vector<std::int64_t>& alpha,
                                 std::int64_t p) {
    (void)w;
    FiberedBound out;
    if (alpha.size() != q.fibers.size()) {
        out.hypothesis_failed = true;
        out.reason = "one coefficient per fiber required";
        return out;
    }
    for (const Fiber& f : q.fibers)
        if (f.residual_m % p != 0) {
            out.hypothesis_failed = true;
            out.reason = "a residual multiplicity is nonzero mod p";
            return out;
        }
    const std::size_t r = q.fibers.size();
    if (q.index % p == 0) {
        out.bound = r >= 1 ? r - 1 : 0;
        out.reason = "index divisible by p";
        return out;
    }
    std::int64_t s = 0;
    for (std::int64_t a : alpha) s = mod_reduce(s + a, p);
    if (s == 0) {
        out.bound = r >= 2 ? r - 2 : 0;
        out.reason = "fiber coefficients sum to zero";
        return out;
    }
    out.reason = "neither clause applies";
    return out;
}

namespace {

// Each fiber must be completely p-reductive w.r.t. its restricted form
// alpha_i sum_j m_ij sigma_ij on the subcurve of its own components.
bool fibers_reductive(const WeakCombinatorics& w, const QuasiFiberStructure& q,
                      const std::vector<std::int64_t>& alpha, std::int64_t p) {
    for (std::size_t i = 0; i < q.fibers.size(); ++i) {
        std::vector<int> comps;
        std::vector<std::int64_t> coeffs;
        for (const auto& [c, m] : q.fibers[i].components) {
            comps.push_back(c);
            coeffs.push_back(mod_reduce(m * alpha[i], p));
        }
        WeakCombinatorics sub = restrict_curve(w, comps);
        OneForm fi = make_one_form(p, coeffs);
        if (!fi.is_coordinate_free()) return false;
        if (!completely_p_reductive(sub, fi).reduced) return false;
    }
    return true;
}

} // namespace

ExactH1 exact_h1_index_p(const WeakCombinatorics& w,
                         const QuasiFiberStructure& q,
                         const std::vector<std::int64_t>& alpha,
                         std::int64_t p) {
    ExactH1 out;
    const std::size_t r = q.fibers.size();
    if (alpha.size() != r) {
        out.case_tag = "coefficient count mismatch";
        return out;
    }
    for (const Fiber& f : q.fibers)
        if (f.residual_m % p != 0) {
            out.case_tag = "residual multiplicity nonzero mod p";
            return out;
        }
    for (std::int64_t a : alpha)
        if (mod_reduce(a, p) == 0) {
            out.case_tag = "fiber coefficient vanishes mod p";
            return out;
        }
    if (!fibers_reductive(w, q, alpha, p)) {
        out.case_tag = "a fiber is not completely p-reductive";
        return out;
    }

    StructureReport rep = validate_structure(w, q);
    if (!rep.ok()) {
        out.case_tag = "structure invalid";
        return out;
    }

    bool canonical = true;
    for (std::int64_t a : alpha)
        if (mod_reduce(a, p) != 1) canonical = false;

    if (canonical && q.index % p == 0) {
        out.value = r - 1;
        out.case_tag = "canonical form of an index-p structure";
        return out;
    }

    std::int64_t s = 0;
    for (std::int64_t a : alpha) s = mod_reduce(s + a, p);
    if (s != 0) {
        out.case_tag = "coefficients do not sum to zero";
        return out;
    }
    bool all_mu_zero = true;
    for (const auto& [key, mu] : rep.profile.mu_delta)
        if (mu % p != 0) all_mu_zero = false;
    out.value = all_mu_zero ? r - 1 : r - 2;
    out.case_tag = all_mu_zero ? "all mu_delta vanish mod p"
                               : "not all mu_delta vanish mod p";
    return out;
}

RootsResult roots_lower_bounds(const WeakCombinatorics& w,
                               const QuasiFiberStructure& q,
                               const std::map<int, std::int64_t>& nu) {
    RootsResult out;
    const std::size_t r = q.fibers.size();

    std::vector<std::int64_t> all_nu;
    for (const Fiber& f : q.fibers)
        for (const auto& [c, m] : f.components) {
            auto it = nu.find(c);
            if (it == nu.end() || it->second <= 0) {
                out.errors.push_back("missing or nonpositive twist for component '" +
                                     w.components[c].id + "'");
                return out;
            }
            all_nu.push_back(it->second);
        }
    if (gcd_list(std::span<const std::int64_t>(all_nu.data(), all_nu.size())) != 1) {
        out.errors.push_back("twist weights must be coprime");
        return out;
    }

    // ratio nu_ij / m_ij must be one reduced fraction per fiber
    std::vector<Rational> ratio(r);
    for (std::size_t i = 0; i < r; ++i) {
        bool first = true;
        for (const auto& [c, m] : q.fibers[i].components) {
            Rational rr(nu.at(c), m);
            if (first) { ratio[i] = rr; first = false; }
            else if (!(ratio[i] == rr)) {
                out.errors.push_back(
                    "twist/multiplicity ratio varies inside a fiber (component '" +
                    w.components[c].id + "')");
                return out;
            }
        }
    }

    Rational ratio0(0);
    for (std::size_t i = 0; i < r; ++i) ratio0 = ratio0 + ratio[i];
    std::vector<Rational> ratios{ratio0};
    ratios.insert(ratios.end(), ratio.begin(), ratio.end());
    std::vector<std::int64_t> residual_m{q.index};
    for (const Fiber& f : q.fibers) residual_m.push_back(f.residual_m);

    std::vector<std::int64_t> dens;
    for (const Rational& rr : ratios) dens.push_back(rr.den());
    std::int64_t qq = lcm_list(std::span<const std::int64_t>(dens.data(), dens.size()));

    // scaled[i] = q * p_i / q_i, an integer
    std::vector<std::int64_t> scaled;
    std::vector<std::int64_t> terms;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        std::int64_t v = ratios[i].num() * (qq / ratios[i].den());
        scaled.push_back(v);
        terms.push_back(v * residual_m[i]); // zero when m_i = 0, ignored by gcd
    }
    std::int64_t M = gcd_list(std::span<const std::int64_t>(terms.data(), terms.size()));
    if (M == 0) {
        out.errors.push_back("no order constraint derivable (all terms vanish)");
        return out;
    }

    std::size_t r0 = 0;
    for (std::int64_t m : residual_m)
        if (m == 0) ++r0;

    for (std::int64_t N : divisors(M)) {
        if (N <= 1) continue;
        std::size_t lN = 0;
        for (std::size_t i = 0; i < ratios.size(); ++i)
            if (residual_m[i] != 0 && scaled[i] % N != 0) ++lN;
        std::int64_t raw = static_cast<std::int64_t>(lN) +
                           static_cast<std::int64_t>(r0) - 2;
        out.bounds.push_back({N, raw < 0 ? 0u : static_cast<std::size_t>(raw)});
    }
    return out;
}

namespace {

std::map<int, std::int64_t> twist_from(const WeakCombinatorics& w,
                                       const QuasiFiberStructure& q,
                                       bool scale_down_multiple, int multiple_fiber,
                                       std::int64_t k) {
    std::map<int, std::int64_t> nu;
    for (std::size_t i = 0; i < q.fibers.size(); ++i)
        for (const auto& [c, m] : q.fibers[i].components)
            nu[c] = (scale_down_multiple && static_cast<int>(i) == multiple_fiber)
                        ? m / k
                        : m;
    (void)w;
    return nu;
}

} // namespace

std::optional<MultiplicityCertificate> exact_multiplicity_reduced(
    const WeakCombinatorics& w, const QuasiFiberStructure& q, std::int64_t p) {
    const std::size_t r = q.fibers.size();
    if (r < 2 || r % p != 0) return std::nullopt;

    StructureReport rep = validate_structure(w, q);
    if (!rep.ok()) return std::nullopt;
    for (const Fiber& f : q.fibers)
        if (f.residual_m != 0) return std::nullopt;

    std::vector<std::int64_t> mbar;
    for (const Fiber& f : q.fibers)
        for (const auto& [c, m] : f.components) {
            if (std::gcd(p, m) != 1) return std::nullopt;
            mbar.push_back(m);
        }
    if (gcd_list(std::span<const std::int64_t>(mbar.data(), mbar.size())) != 1)
        return std::nullopt;

    bool some_mu_unit = false;
    for (const auto& [key, mu] : rep.profile.mu_delta)
        if (std::gcd(p, mu) == 1) some_mu_unit = true;
    if (!some_mu_unit) return std::nullopt;

    std::vector<std::int64_t> ones(r, 1);
    ExactH1 upper = exact_h1_index_p(w, q, ones, p);
    if (!upper.value || *upper.value != r - 2) return std::nullopt;

    std::map<int, std::int64_t> nu = twist_from(w, q, false, -1, 1);
    RootsResult roots = roots_lower_bounds(w, q, nu);
    if (!roots.ok()) return std::nullopt;
    bool lower_ok = false;
    for (const RootsBound& b : roots.bounds)
        if (b.order == p && b.bound >= r - 2) lower_ok = true;
    if (!lower_ok) return std::nullopt;

    MultiplicityCertificate cert;
    cert.p = p;
    cert.value = r - 2;
    cert.route = "reduced fiber-type multiplicity";
    cert.twist.assign(w.components.size(), 0);
    for (const auto& [c, v] : nu) cert.twist[c] = v;
    return cert;
}

std::optional<MultiplicityCertificate> exact_multiplicity_nonreduced(
    const WeakCombinatorics& w, const QuasiFiberStructure& q, std::int64_t p) {
    const std::size_t total = q.fibers.size();
    if (total < 2) return std::nullopt;

    // exactly one fiber all of whose multiplicities share a factor k > 1
    int multiple = -1;
    std::int64_t k = 0;
    for (std::size_t i = 0; i < total; ++i) {
        std::int64_t g = 0;
        for (const auto& [c, m] : q.fibers[i].components) g = std::gcd(g, m);
        if (g > 1) {
            if (multiple != -1) return std::nullopt;
            multiple = static_cast<int>(i);
            k = g;
        }
    }
    if (multiple < 0) return std::nullopt;

    const std::size_t r = total - 1;
    if ((1 + k * static_cast<std::int64_t>(r)) % p != 0) return std::nullopt;

    StructureReport rep = validate_structure(w, q);
    if (!rep.ok()) return std::nullopt;
    for (const Fiber& f : q.fibers)
        if (f.residual_m != 0) return std::nullopt;

    std::map<int, std::int64_t> nu = twist_from(w, q, true, multiple, k);
    std::vector<std::int64_t> nus;
    for (const auto& [c, v] : nu) {
        if (std::gcd(p, v) != 1) return std::nullopt;
        nus.push_back(v);
    }
    if (gcd_list(std::span<const std::int64_t>(nus.data(), nus.size())) != 1)
        return std::nullopt;

    bool some_mu_unit = false;
    for (const auto& [key, mu] : rep.profile.mu_delta)
        if (std::gcd(p, mu) == 1) some_mu_unit = true;
    if (!some_mu_unit) return std::nullopt;

    // Upper route: the nu form is associated with coefficients 1/k on the
    // multiple fiber and 1 elsewhere; their sum is (1 + k r)/k = 0 mod p.
    std::vector<std::int64_t> alpha(total, 1);
    std::int64_t kinv = Fp(k, p).inverse().value();
    alpha[multiple] = kinv;
    ExactH1 upper = exact_h1_index_p(w, q, alpha, p);
    if (!upper.value || *upper.value != r - 1) return std::nullopt;

    RootsResult roots = roots_lower_bounds(w, q, nu);
    if (!roots.ok()) return std::nullopt;
    bool lower_ok = false;
    for (const RootsBound& b : roots.bounds)
        if (b.order == p && b.bound >= r - 1) lower_ok = true;
    if (!lower_ok) return std::nullopt;

    MultiplicityCertificate cert;
    cert.p = p;
    cert.value = r - 1;
    cert.route = "multiple-fiber multiplicity";
    cert.twist.assign(w.components.size(), 0);
    for (const auto& [c, v] : nu) cert.twist[c] = v;
    return cert;
}

} // namespace aomoto
