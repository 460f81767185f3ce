#include "ramabern/bernoulli.hpp"
#include "ramabern/catalog.hpp"
#include "ramabern/lfunction.hpp"
#include "ramabern/moments.hpp"
#include "ramabern/racah.hpp"
#include "ramabern/sequences.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace ramabern;

namespace {

// Rationals cross the boundary as fractions.Fraction, converted through
// their shared exact text form "p/q".
py::object to_fraction(const Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(r.str());
}

Rat rat_from(py::handle h) { return Rat::parse(py::str(h).cast<std::string>()); }

py::list to_fraction_list(const std::vector<Rat>& v) {
    py::list out;
    for (const auto& r : v) out.append(to_fraction(r));
    return out;
}

std::vector<Rat> rats_from(py::iterable it) {
    std::vector<Rat> v;
    for (py::handle h : it) v.push_back(rat_from(h));
    return v;
}

Poly poly_from(py::iterable coeffs) { return Poly(rats_from(coeffs)); }

RacahParams params_from(py::iterable it) {
    std::vector<Rat> v = rats_from(it);
    if (v.size() != 4)
        throw py::value_error("params must hold exactly four rationals (alpha, beta, gamma, "
                              "delta), got " +
                              std::to_string(v.size()));
    return RacahParams{v[0], v[1], v[2], v[3]};
}

py::dict eval_result_dict(const LEvalResult& res) {
    py::dict d;
    d["value"] = res.value;
    d["tail_estimate"] = res.tail_estimate;
    d["terms_used"] = res.terms_used;
    d["converged"] = res.converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Ramanujan-Bernoulli sequences, Racah-family moment problems, and the "
              "attached non-standard L-function. Rationals are fractions.Fraction; "
              "polynomials are coefficient lists, lowest degree first.";

    py::register_exception<InadmissibleParams>(m, "InadmissibleParams", PyExc_ValueError);

    m.def(
        "bernoulli", [](std::size_t n) { return to_fraction(bernoulli(n)); }, py::arg("n"),
        "Bernoulli number B_n (B_1 = -1/2 convention).");

    m.def(
        "psi", [](py::iterable coeffs) { return to_fraction(psi(poly_from(coeffs))); },
        py::arg("coeffs"), "The linear form sending x^n to B_n, applied to a polynomial.");

    m.def(
        "r_value",
        [](const std::string& kind, std::size_t n) {
            return to_fraction(r_value(rseq_kind_parse(kind), n));
        },
        py::arg("kind"), py::arg("n"), "R_n for kind 'rplus' or 'rminus'.");

    m.def(
        "r_sequence",
        [](const std::string& kind, std::size_t count) {
            return to_fraction_list(r_sequence(rseq_kind_parse(kind), count));
        },
        py::arg("kind"), py::arg("count"), "First `count` values of the sequence.");

    m.def(
        "racah_poly",
        [](py::iterable params, unsigned n) {
            return to_fraction_list(racah_poly(params_from(params), n).coeffs());
        },
        py::arg("params"), py::arg("n"),
        "R_n in the moment variable y = x(x+gamma+delta+1), as coefficients.");

    m.def(
        "monic_racah",
        [](py::iterable params, unsigned n) {
            return to_fraction_list(monic_racah(params_from(params), n).coeffs());
        },
        py::arg("params"), py::arg("n"), "R_n rescaled to leading coefficient 1.");

    m.def(
        "favard_moments",
        [](py::iterable params, py::handle shift, unsigned count) {
            return to_fraction_list(favard_moments(params_from(params), rat_from(shift), count));
        },
        py::arg("params"), py::arg("shift"), py::arg("count"),
        "Moments of the unique normalized functional annihilating R_n(y + shift), n >= 1.");

    m.def(
        "jacobi_from_moments",
        [](py::iterable mu) {
            JacobiData jd = jacobi_from_moments(rats_from(mu));
            return py::make_tuple(to_fraction_list(jd.b), to_fraction_list(jd.lam));
        },
        py::arg("mu"),
        "Monic three-term recurrence coefficients (b, lam) from moments; lam[0] = 0.");

    m.def(
        "moments_from_jacobi",
        [](py::iterable b, py::iterable lam, unsigned count) {
            JacobiData jd{rats_from(b), rats_from(lam)};
            return to_fraction_list(moments_from_jacobi(jd, count));
        },
        py::arg("b"), py::arg("lam"), py::arg("count"),
        "Regenerates moments from recurrence coefficients.");

    m.def(
        "hankel_det",
        [](py::iterable mu, unsigned n) { return to_fraction(hankel_det(rats_from(mu), n)); },
        py::arg("mu"), py::arg("n"), "Determinant of the n x n moment matrix (mu_{i+j}).");

    m.def(
        "verify_theorem",
        [](const std::string& id, unsigned depth) {
            const CatalogEntry& e = catalog_entry(id);
            TheoremReport rep = verify_theorem(e.spec, depth);
            py::dict d;
            d["id"] = e.id;
            d["ok"] = rep.ok();
            d["normalizer_ok"] = rep.normalizer_ok;
            d["moments_equal"] = rep.moments_equal;
            d["residues_vanish"] = rep.residues_vanish;
            d["first_mismatch"] = rep.first_mismatch;
            d["favard"] = to_fraction_list(rep.favard);
            d["psi"] = to_fraction_list(rep.psi_side);
            d["target"] = to_fraction_list(rep.target);
            d["residues"] = to_fraction_list(rep.residues);
            return d;
        },
        py::arg("id"), py::arg("depth") = 20,
        "Runs one catalog statement: Favard moments vs Psi-side vs target, plus residues.");

    m.def(
        "verify_u_shift",
        [](py::handle u, unsigned depth) {
            UShiftReport rep = verify_u_shift(rat_from(u), depth);
            py::dict d;
            d["u"] = to_fraction(rep.u);
            d["shift"] = to_fraction(rep.shift);
            d["ok"] = rep.ok();
            d["first_mismatch"] = rep.first_mismatch;
            d["psi"] = to_fraction_list(rep.psi_side);
            d["favard"] = to_fraction_list(rep.favard);
            return d;
        },
        py::arg("u"), py::arg("depth") = 12,
        "Checks psi(((x+u)(x+1-u))^n) against the family shifted by -u(1-u).");

    m.def(
        "catalog",
        [] {
            py::list entries;
            for (const auto& e : catalog()) {
                py::dict d;
                d["id"] = e.id;
                d["params"] = py::make_tuple(
                    to_fraction(e.spec.params.alpha), to_fraction(e.spec.params.beta),
                    to_fraction(e.spec.params.gamma), to_fraction(e.spec.params.delta));
                d["weight"] = to_fraction_list(e.spec.weight.coeffs());
                d["subst"] = to_fraction_list(e.spec.subst.coeffs());
                d["shift"] = to_fraction(e.spec.shift);
                d["normalizer"] = to_fraction(e.spec.normalizer);
                d["target_kind"] = std::string(rseq_kind_name(e.spec.target.kind));
                d["target_offset"] = e.spec.target.offset;
                d["description"] = e.description;
                entries.append(d);
            }
            return entries;
        },
        "The five frozen orthogonality statements.");

    m.def(
        "l_value_neg",
        [](unsigned n, py::iterable poly) {
            return to_fraction(l_value_neg(LSeriesSpec::from_poly(poly_from(poly)), n));
        },
        py::arg("n"), py::arg("poly"),
        "Exact value -psi(P^n)/n of the series at s = 1 - n.");

    m.def(
        "l_eval",
        [](std::complex<double> s, double tol, unsigned long max_terms, py::iterable poly) {
            return eval_result_dict(
                l_eval(LSeriesSpec::from_poly(poly_from(poly)), s, tol, max_terms));
        },
        py::arg("s"), py::arg("tol") = 1e-10, py::arg("max_terms") = 10000000UL,
        py::arg("poly") = py::make_tuple(1, "3/2", "1/2"),
        "Numeric series value via the continuation formula, Re(s) > 1 - 1/deg.");

    m.def(
        "l_direct",
        [](std::complex<double> s, unsigned long terms, py::iterable poly) {
            return eval_result_dict(l_direct(LSeriesSpec::from_poly(poly_from(poly)), s, terms));
        },
        py::arg("s"), py::arg("terms") = 1000000UL,
        py::arg("poly") = py::make_tuple(1, "3/2", "1/2"),
        "Naive partial sum with integral-comparison tail estimate, Re(s) > 1.");

    m.def(
        "antidifference",
        [](py::iterable pprime) {
            return to_fraction_list(antidifference(poly_from(pprime)).coeffs());
        },
        py::arg("pprime"), "The polynomial A with A(0) = 1 and A(x+1) - A(x) = P'(x).");
}
