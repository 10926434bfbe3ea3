#include "fueterlab/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace fueterlab {

static std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

static Rational rational_parse(const std::string& s) {
    if (s.empty()) throw std::runtime_error("json: empty rational string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error("json: malformed rational '" + s + "'");
    }
}

static const Json& require(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw std::runtime_error(std::string("json: missing field '") + field + "'");
    return j.at(field);
}

Json to_json(const ExactScalar& s) {
    Json arr = Json::array();
    for (const auto& [k, c] : s.terms()) {
        Json t;
        t["num"] = rational_str(c);
        t["rad"] = k.rad;
        t["pihalf"] = k.pihalf;
        arr.push_back(std::move(t));
    }
    return arr;
}

ExactScalar exact_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("json: scalar must be an array");
    ExactScalar s;
    for (const auto& t : j) {
        const Json& num = require(t, "num");
        if (!num.is_string()) throw std::runtime_error("json: 'num' must be a string");
        long long rad = require(t, "rad").get<long long>();
        long pihalf = require(t, "pihalf").get<long>();
        s += ExactScalar::term(rational_parse(num.get<std::string>()), BigInt(rad),
                               pihalf);
    }
    return s;
}

Json to_json(const QuatE& q) {
    Json j;
    j["w"] = to_json(q.w);
    j["x"] = to_json(q.x);
    j["y"] = to_json(q.y);
    j["z"] = to_json(q.z);
    return j;
}

QuatE quate_from_json(const Json& j) {
    return {exact_from_json(require(j, "w")), exact_from_json(require(j, "x")),
            exact_from_json(require(j, "y")), exact_from_json(require(j, "z"))};
}

Json to_json(const QuatD& q) {
    Json j;
    j["w"] = q.w;
    j["x"] = q.x;
    j["y"] = q.y;
    j["z"] = q.z;
    return j;
}

Json to_json(const NCPoly& p) {
    Json terms = Json::array();
    // the underlying map is graded-lex ordered already
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["mono"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

NCPoly ncpoly_from_json(const Json& j) {
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) throw std::runtime_error("json: 'terms' must be an array");
    NCPoly p;
    for (const auto& t : terms) {
        const Json& mono = require(t, "mono");
        if (!mono.is_array() || mono.size() != 4)
            throw std::runtime_error("json: 'mono' must be a 4-array");
        Monomial4 m;
        for (int i = 0; i < 4; ++i) {
            m.e[i] = mono.at(i).get<int>();
            if (m.e[i] < 0) throw std::runtime_error("json: negative exponent in 'mono'");
        }
        p += NCPoly::monomial(m, quate_from_json(require(t, "coeff")));
    }
    return p;
}

Json to_json(const SliceCoeffMatrix& f) {
    Json rows = Json::array();
    for (int k = 0; k < f.order(); ++k) {
        Json row = Json::array();
        for (int j = 0; j <= f.trunc_degree(); ++j) row.push_back(to_json(f.coeff(k, j)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["order"] = f.order();
    j["trunc"] = f.trunc_degree();
    j["alpha"] = std::move(rows);
    return j;
}

SliceCoeffMatrix matrix_from_json(const Json& j) {
    int order = require(j, "order").get<int>();
    if (order < 1) throw std::runtime_error("json: 'order' must be >= 1");
    const Json& alpha = require(j, "alpha");
    if (!alpha.is_array() || static_cast<int>(alpha.size()) > order)
        throw std::runtime_error("json: 'alpha' must be an array of at most 'order' rows");
    SliceCoeffMatrix f(order);
    for (size_t k = 0; k < alpha.size(); ++k) {
        if (!alpha.at(k).is_array())
            throw std::runtime_error("json: 'alpha' rows must be arrays");
        for (size_t col = 0; col < alpha.at(k).size(); ++col)
            f.set_coeff(static_cast<int>(k), static_cast<int>(col),
                        quate_from_json(alpha.at(k).at(col)));
    }
    return f;
}

Json to_json(const ASpaceElement& e) {
    Json rows = Json::array();
    for (const auto& row : e.beta) {
        Json r = Json::array();
        for (const auto& b : row) r.push_back(to_json(b));
        rows.push_back(std::move(r));
    }
    Json j;
    j["n"] = e.n;
    j["beta"] = std::move(rows);
    return j;
}

Json to_json(const ATildeElement& e) {
    Json arr = Json::array();
    for (const auto& b : e.beta) arr.push_back(to_json(b));
    Json j;
    j["n"] = e.n;
    j["beta"] = std::move(arr);
    return j;
}

static std::string format_17g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["check"] = r.check_name;
    Json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["mode"] = to_string(r.mode);
    j["status"] = to_string(r.status);
    j["max_abs_err"] = format_17g(r.max_abs_err);
    j["notes"] = r.notes;
    return j;
}

}  // namespace fueterlab
