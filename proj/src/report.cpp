#include "aomoto/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aomoto/numtheory.hpp"
#include "aomoto/reduction.hpp"

namespace aomoto {

std::int64_t TwistSpecification::total_degree(const WeakCombinatorics& w) const {
    std::int64_t n = 0;
    for (std::size_t i = 0; i < w.components.size(); ++i)
        n += w.components[i].degree * weights[i];
    return n;
}

TwistSpecification classical_twist(const WeakCombinatorics& w) {
    TwistSpecification t;
    t.weights.assign(w.components.size(), 1);
    return t;
}

std::vector<std::int64_t> candidate_orders(const WeakCombinatorics& w,
                                           const TwistSpecification& twist) {
    std::vector<std::int64_t> g;
    for (std::int64_t m : twist.weights) g.push_back(m);
    if (gcd_list(std::span<const std::int64_t>(g.data(), g.size())) != 1)
        throw std::invalid_argument("candidate_orders: twist weights must be coprime");
    std::vector<std::int64_t> out;
    for (std::int64_t n : divisors(twist.total_degree(w)))
        if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::size_t> upper_bound(const WeakCombinatorics& w,
                                       const TwistSpecification& twist,
                                       std::int64_t order) {
    std::int64_t p = prime_power_base(order);
    if (p == 0) return std::nullopt;
    OneForm omega = make_one_form(p, twist.weights);
    return h1(w, p, omega);
}

Report assemble_report(const WeakCombinatorics& w,
                       const TwistSpecification& twist,
                       const std::vector<QuasiFiberStructure>& pencils) {
    Report rep;
    rep.eigenvalue_one_multiplicity = w.components.size() - 1;

    // lower bounds per order: best pencil route
    std::map<std::int64_t, std::pair<std::size_t, std::string>> lower;
    for (std::size_t pen = 0; pen < pencils.size(); ++pen) {
        const QuasiFiberStructure& q = pencils[pen];
        // the pencil route bounds the same twisted polynomial the report is
        // about, so nu is the report twist restricted to the fiber components
        std::map<int, std::int64_t> nu;
        for (std::size_t i = 0; i < q.fibers.size(); ++i)
            for (const auto& [c, m] : q.fibers[i].components)
                nu[c] = twist.weights[c];
        RootsResult roots = roots_lower_bounds(w, q, nu);
        if (!roots.ok()) {
            for (const std::string& e : roots.errors)
                rep.notes.push_back("pencil " + std::to_string(pen + 1) +
                                    " gives no bounds: " + e);
            continue;
        }
        for (const RootsBound& b : roots.bounds) {
            auto it = lower.find(b.order);
            std::ostringstream src;
            src << "lower " << b.bound << ": pencil route (order divides the "
                "member constraint)";
            if (it == lower.end() || it->second.first < b.bound)
                lower[b.order] = {b.bound, src.str()};
        }
    }

    // exactness certificates from the fiber-type structure
    std::map<std::int64_t, std::pair<std::size_t, std::string>> certs;
    auto cert_matches_twist = [&](const MultiplicityCertificate& c) {
        return c.twist == twist.weights;
    };
    for (const QuasiFiberStructure& q : pencils) {
        for (std::int64_t p : divisors(static_cast<std::int64_t>(q.fibers.size())))
            if (p > 1 && is_prime(static_cast<std::uint64_t>(p)))
                if (auto c = exact_multiplicity_reduced(w, q, p))
                    if (cert_matches_twist(*c)) certs[p] = {c->value, c->route};
        // multiple-fiber route: p ranges over prime factors of 1 + k r
        for (std::size_t i = 0; i < q.fibers.size(); ++i) {
            std::int64_t g = 0;
            for (const auto& [c, m] : q.fibers[i].components) g = std::gcd(g, m);
            if (g <= 1) continue;
            std::int64_t target = 1 + g * static_cast<std::int64_t>(q.fibers.size() - 1);
            for (std::int64_t p : divisors(target))
                if (p > 1 && is_prime(static_cast<std::uint64_t>(p)))
                    if (auto c = exact_multiplicity_nonreduced(w, q, p))
                        if (cert_matches_twist(*c)) certs[p] = {c->value, c->route};
        }
    }

    // external annotations riding along in the curve metadata
    std::map<std::int64_t, std::int64_t> external;
    if (w.meta.is_object() && w.meta.contains("external")) {
        for (const auto& e : w.meta["external"])
            external[e["order"].get<std::int64_t>()] =
                e["value"].get<std::int64_t>();
    }

    for (std::int64_t order : candidate_orders(w, twist)) {
        MultiplicityBound b;
        b.order = order;
        std::int64_t p = prime_power_base(order);
        if (p != 0) {
            b.upper = upper_bound(w, twist, order);
            std::ostringstream os;
            os << "upper " << *b.upper << ": h1 over GF(" << p
               << ") (modular inequality)";
            b.provenance.push_back(os.str());
        } else {
            b.provenance.push_back(
                "no combinatorial upper bound (order not a prime power)");
        }
        auto lo = lower.find(order);
        if (lo != lower.end()) {
            b.lower = lo->second.first;
            b.provenance.push_back(lo->second.second);
        }
        if (b.upper && *b.upper == 0) {
            b.exact = true;
            b.provenance.push_back("exact: upper bound is zero");
        }
        if (b.upper && b.lower == *b.upper) b.exact = true;
        auto ct = certs.find(order);
        if (ct != certs.end()) {
            b.exact = true;
            b.lower = ct->second.first;
            b.upper = ct->second.first;
            b.provenance.push_back("exact: " + ct->second.second);
        }
        auto ext = external.find(order);
        if (ext != external.end()) {
            b.external = ext->second;
            b.provenance.push_back("external: known value " +
                                   std::to_string(ext->second) +
                                   " (annotation, not used)");
        }
        rep.bounds.push_back(std::move(b));
    }
    return rep;
}

std::string render_text(const WeakCombinatorics& w, const Report& report) {
    std::ostringstream os;
    os << "multiplicity bounds for cyclotomic orders"
       << "  (components: " << w.components.size() << ")\n";
    os << "order 1 (background): multiplicity " << report.eigenvalue_one_multiplicity
       << "\n";
    os << "order | lower | upper | exact\n";
    for (const MultiplicityBound& b : report.bounds) {
        os << b.order << " | " << b.lower << " | ";
        if (b.upper) os << *b.upper;
        else os << "-";
        os << " | " << (b.exact ? "yes" : "no") << "\n";
        for (const std::string& s : b.provenance) os << "    " << s << "\n";
    }
    for (const std::string& n : report.notes) os << "note: " << n << "\n";
    return os.str();
}

nlohmann::json render_structured(const WeakCombinatorics& w,
                                 const Report& report) {
    nlohmann::json doc;
    doc["components"] = w.components.size();
    doc["eigenvalue_one_multiplicity"] = report.eigenvalue_one_multiplicity;
    doc["bounds"] = nlohmann::json::array();
    for (const MultiplicityBound& b : report.bounds) {
        nlohmann::json e;
        e["order"] = b.order;
        e["lower"] = b.lower;
        if (b.upper) e["upper"] = *b.upper;
        e["exact"] = b.exact;
        e["provenance"] = b.provenance;
        if (b.external) e["external"] = *b.external;
        doc["bounds"].push_back(std::move(e));
    }
    if (!report.notes.empty()) doc["notes"] = report.notes;
    return doc;
}

} // namespace aomoto
