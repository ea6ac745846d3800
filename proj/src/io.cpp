#include "excdom/io.hpp"

#include <cmath>
#include <stdexcept>

namespace excdom {

namespace {

double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string("expected a number for ") + what);
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw std::invalid_argument(std::string("non-finite value for ") + what);
    return x;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Octonion& o) {
    Json j = Json::array();
    for (const auto& c : o.c) j.push_back(to_json(c));
    return j;
}

Json to_json(const AlgebraSignature& sig) {
    return Json{{"field", sig.field == Field::Real ? "R" : "C"}, {"mu", sig.mu}};
}

Json to_json(const CompositionElement& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_json(c));
    return Json{{"signature", to_json(x.signature())}, {"coords", coords}};
}

Json to_json(const AlbertElement& a) {
    Json alpha = Json::array();
    for (const auto& c : a.alpha) alpha.push_back(to_json(c));
    Json off = Json::array();
    for (const auto& o : a.off) off.push_back(to_json(o));
    return Json{{"alpha", alpha}, {"a", off}};
}

Json to_json(const WElement& x) { return Json{{"b", to_json(x.b)}, {"c", to_json(x.c)}}; }

Json to_json(const FreudenthalPoint& p) {
    return Json{{"lambda", to_json(p.lambda)},
                {"x", to_json(p.x)},
                {"y", to_json(p.y)},
                {"mu", to_json(p.mu)}};
}

Json to_json(const DomainVerdict& v) {
    Json j{{"location", to_string(v.location)},
           {"f", v.f},
           {"roots", v.roots},
           {"margin", v.margin},
           {"confidence", v.low_confidence ? "low" : "high"}};
    if (v.location == Location::Boundary) {
        j["stratum"] = v.stratum;
    } else {
        j["stratum"] = nullptr;
    }
    return j;
}

Json to_json(const BoundaryReport& r) {
    return Json{{"rank", r.rank},
                {"peirce_dims", {r.d0, r.d1, r.d2}},
                {"normal_dim_real", r.normal_dim_real},
                {"stratum_cr_type", {r.stratum_cr_s, r.stratum_cr_t}},
                {"manifold_cr_type", {r.manifold_cr_s, r.manifold_cr_t}},
                {"stratum_dim_real", r.stratum_dim_real},
                {"manifold_dim_real", r.manifold_dim_real},
                {"affine_rank", r.affine_rank}};
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected [re, im] for a complex scalar");
    }
    return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8) {
        throw std::invalid_argument("expected an array of 8 complex pairs for an octonion");
    }
    Octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = complex_from_json(j[i]);
    return o;
}

AlgebraSignature signature_from_json(const Json& j) {
    AlgebraSignature sig;
    const std::string field = j.at("field").get<std::string>();
    if (field == "R") {
        sig.field = Field::Real;
    } else if (field == "C") {
        sig.field = Field::Complex;
    } else {
        throw std::invalid_argument("signature field must be \"R\" or \"C\"");
    }
    for (const auto& m : j.at("mu")) {
        const double mu = finite_number(m, "mu");
        if (mu == 0.0) throw std::invalid_argument("mu parameters must be nonzero");
        sig.mu.push_back(mu);
    }
    if (sig.mu.size() > 4) throw std::invalid_argument("algebra level must be at most 4");
    return sig;
}

CompositionElement composition_from_json(const Json& j) {
    const AlgebraSignature sig = signature_from_json(j.at("signature"));
    const Json& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != sig.dimension()) {
        throw std::invalid_argument("coordinate count does not match algebra dimension");
    }
    std::vector<Complex> c;
    for (const auto& e : coords) c.push_back(complex_from_json(e));
    return CompositionElement(sig, std::move(c));
}

AlbertElement albert_from_json(const Json& j) {
    const Json& alpha = j.at("alpha");
    const Json& off = j.at("a");
    if (!alpha.is_array() || alpha.size() != 3 || !off.is_array() || off.size() != 3) {
        throw std::invalid_argument("expected 3 diagonal scalars and 3 octonion slots");
    }
    AlbertElement a;
    for (std::size_t i = 0; i < 3; ++i) {
        a.alpha[i] = complex_from_json(alpha[i]);
        a.off[i] = octonion_from_json(off[i]);
    }
    return a;
}

WElement w_from_json(const Json& j) {
    return WElement{octonion_from_json(j.at("b")), octonion_from_json(j.at("c"))};
}

FreudenthalPoint freudenthal_from_json(const Json& j) {
    return FreudenthalPoint{complex_from_json(j.at("lambda")), albert_from_json(j.at("x")),
                            albert_from_json(j.at("y")), complex_from_json(j.at("mu"))};
}

}  // namespace excdom
