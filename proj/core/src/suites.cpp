#include "residua/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "residua/catalog.hpp"
#include "residua/completion.hpp"
#include "residua/dsl.hpp"
#include "residua/errors.hpp"
#include "residua/poly_algebra.hpp"
#include "residua/poly_gf.hpp"
#include "residua/representatives.hpp"
#include "residua/split_ext.hpp"

namespace residua {

namespace {

SuiteReport named_report(std::string name) {
    SuiteReport rep;
    rep.suite = std::move(name);
    return rep;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string map_text(const RingMorphism& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.map.size(); ++i) out += (i ? "," : "") + std::to_string(f.map[i]);
    return out + "]";
}

CatalogOptions catalog_options(const SuiteOptions& o) {
    return CatalogOptions{o.max_order, o.fields, o.extra_rings};
}

std::vector<Ring> eligible_catalog(const SuiteOptions& o) {
    std::vector<Ring> out;
    for (auto& r : build_catalog(catalog_options(o)))
        if (r.order() <= o.max_order) out.push_back(std::move(r));
    return out;
}

void record_catalog(SuiteReport& report, const std::vector<Ring>& rings) {
    for (const auto& r : rings) report.catalog.push_back(r.label());
}

// The algebras A over GF(q) behind the sdp family of the catalog.
struct AlgebraInstance {
    std::string label;
    NonUnitalAlgebra algebra;
};

std::vector<AlgebraInstance> sdp_instances(const SuiteOptions& o, std::size_t min_dim, bool prime_only) {
    std::vector<AlgebraInstance> out;
    for (std::uint32_t p : o.fields) {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
        for (std::uint64_t q = p; q * q <= o.max_order; q *= p) {
            if (prime_only && q != p) break;
            const Ring k = gf_ring(q);
            std::uint64_t order = q;
            for (std::size_t d = 0; d <= 2; ++d, order *= q) {
                if (order > o.max_order) break;
                if (d < min_dim) continue;
                const std::string tail = std::to_string(q) + "," + std::to_string(d);
                out.push_back({"sdp(" + tail + ",zero)", zero_algebra(k, d)});
                if (d > 0) out.push_back({"sdp(" + tail + ",unital)", unital_algebra(k, d)});
            }
        }
    }
    return out;
}

// -- suites -------------------------------------------------------------------

SuiteReport suite_lemma21(const SuiteOptions& o) {
    SuiteReport rep = named_report("lemma21");
    const auto rings = eligible_catalog(o);
    for (const auto& a : rings) {
        if (!is_local(a)) continue;
        const auto kappa = largest_subfield(a);
        if (!kappa) continue;
        rep.catalog.push_back(a.label());
        const auto m = *local_maximal_ideal(a);
        const bool ok = check_unit_decomposition(a, *kappa);
        rep.add(a.label(), "units = kappa* + m", ok,
                "kappa=" + set_text(a, kappa->members) + " |m|=" + std::to_string(m.size()) +
                    " |units|=" + std::to_string(units(a).members.size()));
    }
    return rep;
}

SuiteReport suite_lemma22(const SuiteOptions& o) {
    SuiteReport rep = named_report("lemma22");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    for (const auto& a : rings) {
        const auto fields = enumerate_subfields(a);
        for (const auto& m : maximal_ideals(a)) {
            for (const auto& kappa : fields) {
                const auto d = residue_restriction(a, kappa, m);
                rep.add(a.label(), "kappa=" + set_text(a, kappa.members) + " m=" + set_text(a, m.members),
                        d.biconditional_holds,
                        "direct_sum=" + bool_text(d.intersection_trivial && d.sum_covers) +
                            " restriction_bijective=" + bool_text(d.verdict));
            }
        }
    }
    return rep;
}

SuiteReport suite_thm23(const SuiteOptions& o) {
    SuiteReport rep = named_report("thm23");
    for (const auto& a : eligible_catalog(o)) {
        const auto verdict = check_theorem_qfld(a);
        if (!verdict) continue;
        rep.catalog.push_back(a.label());
        const auto kappa = *largest_subfield(a);
        rep.add(a.label(), "largest subfield is a field of representatives", *verdict,
                "kappa=" + set_text(a, kappa.members));
    }
    return rep;
}

SuiteReport suite_prop24(const SuiteOptions& o) {
    SuiteReport rep = named_report("prop24");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    for (const auto& a : rings) {
        for (const auto& m : maximal_ideals(a)) {
            for (const auto& kappa : fields_of_representatives(a, m)) {
                rep.add(a.label(), "kappa=" + set_text(a, kappa.members) + " m=" + set_text(a, m.members),
                        check_prop_maximal(a, kappa, m), "kappa maximal among subfields");
            }
        }
    }
    return rep;
}

SuiteReport suite_cohen(const SuiteOptions& o) {
    SuiteReport rep = named_report("cohen");
    for (const auto& a : eligible_catalog(o)) {
        const auto m = local_maximal_ideal(a);
        if (!m) continue;
        const auto residue = quotient(a, *m);
        if (characteristic(a) != characteristic(residue.ring)) continue;
        rep.catalog.push_back(a.label());
        const auto reps = fields_of_representatives(a, *m);
        std::string witness = std::to_string(reps.size()) + " field(s) of representatives";
        if (!reps.empty()) witness += ", first " + set_text(a, reps.front().members);
        rep.add(a.label(), "admits a field of representatives", !reps.empty(), witness);
    }
    return rep;
}

SuiteReport suite_diagram(const SuiteOptions& o) {
    SuiteReport rep = named_report("diagram");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    for (const auto& r : rings) {
        for (const auto& ideal : all_ideals(r)) {
            for (const auto& s : sections_enumerate(r, ideal)) {
                const auto t = make_split_triple(r, ideal, s);
                const auto d = verify_split_diagram(t);
                std::optional<std::string> witness;
                for (const auto* list : {&d.identities, &d.morphisms})
                    for (const auto& c : *list)
                        if (!c.pass && !witness) witness = c.name + ": " + c.counterexample.value_or("fails");
                rep.add(r.label(), "I=" + set_text(r, ideal.members) + " s=" + map_text(s), d.all_pass(),
                        witness.value_or(std::to_string(d.identities.size()) + " identities, " +
                                         std::to_string(d.morphisms.size()) + " morphism checks"));
            }
        }
    }
    return rep;
}

SuiteReport suite_roundtrip(const SuiteOptions& o) {
    SuiteReport rep = named_report("roundtrip");
    for (const auto& inst : sdp_instances(o, 0, true)) {
        rep.catalog.push_back(inst.label);
        const auto r = equivalence_roundtrip(inst.algebra);
        rep.add(inst.label, "pair -> triple -> pair", r.base_isomorphic && r.algebra_isomorphic,
                "base_isomorphic=" + bool_text(r.base_isomorphic) +
                    " algebra_isomorphic=" + bool_text(r.algebra_isomorphic));
        rep.add(inst.label, "triple -> pair -> triple", r.triple_isomorphic,
                "phi is an isomorphism of triples: " + bool_text(r.triple_isomorphic));
    }
    return rep;
}

Elem element_named(const Ring& r, const std::string& name) {
    for (Elem a = 0; a < r.order(); ++a)
        if (r.name(a) == name) return a;
    throw InvalidInput(r.label() + " has no element named " + name);
}

SuiteReport suite_dichotomy(const SuiteOptions& o) {
    SuiteReport rep = named_report("dichotomy");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    for (const auto& r : rings) {
        for (const auto& ideal : all_ideals(r)) {
            const auto d = dichotomy_check(r, ideal);
            const std::string kind = d.idempotent ? "idempotent" : d.nilpotent ? "nilpotent" : "neither";
            rep.add(r.label(), "I=" + set_text(r, ideal.members) + " (" + kind + ")", d.passes(),
                    "stable_index=" + std::to_string(d.stable_index) + " complete=" + bool_text(d.complete) +
                        " zero=" + bool_text(d.is_zero));
        }
    }

    // Fixed anchors, independent of the catalog bounds.
    const Ring z8 = evaluate("Z/8");
    const Elem two = 2;
    const Ideal twos = ideal_generated(z8, std::span<const Elem>(&two, 1));
    const bool z8_complete = is_complete(z8, twos);
    rep.catalog.push_back(z8.label());
    rep.add(z8.label(), "anchor: complete at (2)", z8_complete, "complete=" + bool_text(z8_complete));

    const Ring f2f2 = evaluate("prod(GF(2),GF(2))");
    const Elem e = element_named(f2f2, "(1,0)");
    const Ideal left = ideal_generated(f2f2, std::span<const Elem>(&e, 1));
    const auto limit = inverse_limit(f2f2, left);
    const bool complete = is_complete(f2f2, left);
    const bool limit_f2 = find_isomorphism(limit.ring, evaluate("GF(2)")).has_value();
    rep.catalog.push_back(f2f2.label());
    rep.add(f2f2.label(), "anchor: not complete at GF(2)x0, limit ~ GF(2)", !complete && limit_f2,
            "complete=" + bool_text(complete) + " |limit|=" + std::to_string(limit.ring.order()) +
                " limit_is_GF(2)=" + bool_text(limit_f2));
    return rep;
}

std::string trace_text(const std::vector<std::string>& trace) {
    std::string out;
    for (const auto& line : trace) out += (out.empty() ? "" : "; ") + line;
    return out;
}

SuiteReport suite_extremes(const SuiteOptions& o) {
    SuiteReport rep = named_report("extremes");
    for (const auto& inst : sdp_instances(o, 1, false)) {
        rep.catalog.push_back(inst.label);
        if (inst.algebra.is_square_zero()) {
            const auto r = extreme_squarezero_check(inst.algebra);
            rep.add(inst.label, "(a,k)^-1 = (-k^-2 a, k^-1) and ring local", r.confirmed(),
                    r.first_failure.value_or(trace_text(r.trace)));
        } else {
            const auto r = extreme_unital_check(inst.algebra);
            rep.add(inst.label, "(-1,1) not invertible and ring not local", r.confirmed(), trace_text(r.trace));
        }
    }
    return rep;
}

// Distinct roots of f in GF(p), evaluated directly mod p.
std::size_t prime_root_count(std::uint32_t p, const std::vector<Elem>& f) {
    std::size_t roots = 0;
    for (std::uint64_t c = 0; c < p; ++c) {
        std::uint64_t v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * c + *it) % p;
        roots += v == 0;
    }
    return roots;
}

SuiteReport suite_gelfand(const SuiteOptions& o) {
    SuiteReport rep = named_report("gelfand");
    for (std::uint32_t p : o.fields) {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
        const Ring field = gf_ring(p);
        PolyOps<PrimeField> ops{PrimeField{p}};
        std::size_t count = 1;
        for (std::size_t d = 1; d <= 3; ++d) {
            count *= p;
            for (std::size_t i = 0; i < count; ++i) {
                const auto f = ops.monic_from_index(d, i);
                const std::string label =
                    "GF(" + std::to_string(p) + ")[x]/(" + to_string(GfPoly{p, f}) + ")";
                const Ring a = evaluate(label);
                rep.catalog.push_back(label);
                Subring constants;
                for (Elem c = 0; c < p; ++c) constants.members.push_back(c);
                constants.contains_one = true;
                const auto g = gelfand_bijection_check(make_kappa_algebra(a, constants));
                const auto surjective = static_cast<std::size_t>(
                    std::count(g.residue_surjective.begin(), g.residue_surjective.end(), true));
                const std::size_t roots = prime_root_count(p, f);
                rep.add(label, "|Hom_k(A,k)| = #{m : A/m = k} = #roots",
                        g.homs.size() == surjective && surjective == roots && g.restricted_bijection,
                        "homs=" + std::to_string(g.homs.size()) + " residue_k=" + std::to_string(surjective) +
                            " roots=" + std::to_string(roots) + " |Max|=" + std::to_string(g.maximal.size()));
            }
        }
        for (std::size_t dmax = 1; dmax <= 3; ++dmax) {
            const auto spectrum = polyring_max_spectrum(p, dmax);
            const auto rational = static_cast<std::size_t>(std::count_if(
                spectrum.begin(), spectrum.end(), [&](const SpectrumEntry& s) { return s.residue_order == p; }));
            const std::string label = "GF(" + std::to_string(p) + ")[x]";
            rep.add(label, "rational maximal ideals, dmax=" + std::to_string(dmax), rational == p,
                    std::to_string(rational) + " of " + std::to_string(spectrum.size()) + " listed");
        }
    }
    return rep;
}

// -- searches -----------------------------------------------------------------

SuiteReport search_q31(const SuiteOptions& o) {
    SuiteReport rep = named_report("q31");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    const auto survey = complete_local_survey(rings);
    for (const auto& row : survey.rows) {
        rep.add(row.ring, "local ring complete at m", row.complete,
                "|A|=" + std::to_string(row.order) + " |m|=" + std::to_string(row.maximal_size) +
                    " stable_index=" + std::to_string(row.stable_index) +
                    " nilpotent=" + bool_text(row.nilpotent) + " semidirect=" + bool_text(row.semidirect) +
                    " complete=" + bool_text(row.complete));
    }
    return rep;
}

SuiteReport search_absiso(const SuiteOptions& o) {
    SuiteReport rep = named_report("absiso");
    const auto rings = eligible_catalog(o);
    record_catalog(rep, rings);
    for (const auto& r : rings) {
        const auto found = search_absiso_gap(std::span<const Ring>(&r, 1));
        std::string witness = std::to_string(found.triples_examined) + " triples examined";
        for (const auto& f : found.findings)
            witness += "; gap at kappa=" + set_text(r, f.kappa.members) + " m=" + set_text(r, f.maximal.members) +
                       (f.rescued ? " (rescued by another subfield)" : "");
        rep.add(r.label(), "abstract A/m ~ kappa implies restriction bijective", found.findings.empty(), witness);
    }
    return rep;
}

SuiteReport search_uniqueness(const SuiteOptions& o) {
    SuiteReport rep = named_report("uniqueness");
    for (const auto& a : eligible_catalog(o)) {
        const auto m = local_maximal_ideal(a);
        if (!m) continue;
        rep.catalog.push_back(a.label());
        const auto reps = fields_of_representatives(a, *m);
        std::string witness = std::to_string(reps.size()) + " field(s) of representatives";
        for (const auto& k : reps) witness += " " + set_text(a, k.members);
        rep.add(a.label(), "at most one field of representatives", reps.size() <= 1, witness);
    }
    return rep;
}

using Runner = std::function<SuiteReport(const SuiteOptions&)>;

const std::map<std::string, Runner, std::less<>>& suite_table() {
    static const std::map<std::string, Runner, std::less<>> table{
        {"lemma21", suite_lemma21},   {"lemma22", suite_lemma22}, {"thm23", suite_thm23},
        {"prop24", suite_prop24},     {"diagram", suite_diagram}, {"roundtrip", suite_roundtrip},
        {"dichotomy", suite_dichotomy}, {"extremes", suite_extremes}, {"cohen", suite_cohen},
        {"gelfand", suite_gelfand}};
    return table;
}

const std::map<std::string, Runner, std::less<>>& search_table() {
    static const std::map<std::string, Runner, std::less<>> table{
        {"q31", search_q31}, {"absiso", search_absiso}, {"uniqueness", search_uniqueness}};
    return table;
}

SuiteReport dispatch(const std::map<std::string, Runner, std::less<>>& table, std::string_view name,
                     const SuiteOptions& options) {
    const auto it = table.find(name);
    if (it == table.end()) throw UnknownSuite(std::string(name));
    SuiteReport rep = it->second(options);
    rep.finalize();
    return rep;
}

}  // namespace

std::string set_text(const Ring& r, const ElemSet& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + r.name(members[i]);
    return out + "}";
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma21",   "lemma22",   "thm23",    "prop24", "diagram",
                                                "roundtrip", "dichotomy", "extremes", "cohen",  "gelfand"};
    return names;
}

const std::vector<std::string>& search_targets() {
    static const std::vector<std::string> names{"q31", "absiso", "uniqueness"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
    return dispatch(suite_table(), name, options);
}

SuiteReport run_search(std::string_view target, const SuiteOptions& options) {
    return dispatch(search_table(), target, options);
}

std::string ring_info(const Ring& r, ReportFormat format) {
    const auto maximal = maximal_ideals(r);
    const auto fields = enumerate_subfields(r);
    const auto largest = largest_subfield(r);
    const auto m = local_maximal_ideal(r);
    std::optional<bool> equichar;
    if (m) equichar = characteristic(r) == characteristic(quotient(r, *m).ring);

    nlohmann::ordered_json j;
    j["ring"] = r.label();
    j["order"] = r.order();
    j["characteristic"] = characteristic(r);
    j["units"] = units(r).members.size();
    j["local"] = m.has_value();
    j["equicharacteristic"] = equichar ? nlohmann::ordered_json(*equichar) : nlohmann::ordered_json();
    j["maximal_ideals"] = nlohmann::ordered_json::array();
    for (const auto& mi : maximal) j["maximal_ideals"].push_back(set_text(r, mi.members));
    j["subfields"] = nlohmann::ordered_json::array();
    for (const auto& k : fields) j["subfields"].push_back(set_text(r, k.members));
    j["largest_subfield"] = largest ? nlohmann::ordered_json(set_text(r, largest->members)) : nlohmann::ordered_json();
    j["restrictions"] = nlohmann::ordered_json::array();
    for (const auto& mi : maximal) {
        for (const auto& k : fields) {
            const auto d = residue_restriction(r, k, mi);
            j["restrictions"].push_back({{"kappa", set_text(r, k.members)},
                                         {"m", set_text(r, mi.members)},
                                         {"direct_sum", d.intersection_trivial && d.sum_covers},
                                         {"verdict", d.verdict}});
        }
    }
    if (format == ReportFormat::json) return j.dump(2) + "\n";

    std::ostringstream out;
    out << "ring:               " << r.label() << "\n"
        << "order:              " << r.order() << "\n"
        << "characteristic:     " << characteristic(r) << "\n"
        << "units:              " << units(r).members.size() << "\n"
        << "local:              " << (m ? "yes" : "no") << "\n";
    if (equichar) out << "equicharacteristic: " << (*equichar ? "yes" : "no") << "\n";
    out << "maximal ideals:     " << maximal.size() << "\n";
    for (const auto& mi : maximal) out << "  |m|=" << mi.size() << "  " << set_text(r, mi.members) << "\n";
    out << "subfields:          " << (fields.empty() ? "none" : std::to_string(fields.size())) << "\n";
    for (const auto& k : fields) out << "  " << set_text(r, k.members) << "\n";
    out << "largest subfield:   " << (largest ? set_text(r, largest->members) : "none") << "\n";
    for (const auto& row : j["restrictions"]) {
        out << "  kappa=" << row["kappa"].get<std::string>() << " m=" << row["m"].get<std::string>()
            << "  A = kappa (+) m: " << bool_text(row["direct_sum"].get<bool>())
            << "  restriction bijective: " << bool_text(row["verdict"].get<bool>()) << "\n";
    }
    return out.str();
}

std::string cmd_info(std::string_view expr, ReportFormat format) { return ring_info(evaluate(expr), format); }

}  // namespace residua
