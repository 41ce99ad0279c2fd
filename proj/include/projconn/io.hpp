#pragma once

// Text and JSON forms.
//
//   field spec   "q=9", "q=3^2", "q=4:1,1,1"   (modulus coefficients low-to-high, monic)
//   matrix text  "1,0,1,1;0,1,1,2"             (extension entries as colon-joined coefficients, e.g. "1:1")
//   JSON         field elements are their integer encoding sum(c_i p^i)

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "projconn/codes.hpp"
#include "projconn/error.hpp"
#include "projconn/field.hpp"
#include "projconn/matspace.hpp"
#include "projconn/oracle.hpp"
#include "projconn/pathfinder.hpp"
#include "projconn/projective.hpp"

namespace projconn::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

inline unsigned parse_uint(std::string_view s) {
    s = trim(s);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorKind::Parse, "expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

inline FieldCtx parse_field(std::string_view spec) {
    spec = detail::trim(spec);
    if (spec.rfind("q=", 0) == 0) spec.remove_prefix(2);
    const std::size_t colon = spec.find(':');
    const std::string_view order = spec.substr(0, colon);
    unsigned q = 0;
    if (const std::size_t caret = order.find('^'); caret != std::string_view::npos) {
        const unsigned p = detail::parse_uint(order.substr(0, caret));
        const unsigned m = detail::parse_uint(order.substr(caret + 1));
        q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > 256) throw Error(ErrorKind::InvalidArgument, "fields larger than 256 elements are not supported");
        }
    } else {
        q = detail::parse_uint(order);
    }
    if (colon == std::string_view::npos) return FieldCtx::make(q);

    Poly modulus;
    for (auto c : detail::split(spec.substr(colon + 1), ',')) modulus.push_back(detail::parse_uint(c));
    const FieldCtx base = FieldCtx::make(q);  // resolves p and m
    return FieldCtx::make(base.p(), base.m(), std::move(modulus));
}

inline std::string format_field(const FieldCtx& f) {
    std::string s = "q=" + std::to_string(f.q());
    if (!f.is_prime_field()) {
        s += ":";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(f.modulus()[i]);
    }
    return s;
}

inline Raw parse_element(const FieldCtx& f, std::string_view s) {
    s = detail::trim(s);
    if (s.find(':') == std::string_view::npos) return f.checked(detail::parse_uint(s));
    std::vector<unsigned> coeffs;
    for (auto c : detail::split(s, ':')) coeffs.push_back(detail::parse_uint(c));
    return f.from_coefficients(coeffs);
}

inline std::string format_element(const FieldCtx& f, Raw v) {
    if (f.is_prime_field()) return std::to_string(v);
    std::string s;
    const Poly c = f.coefficients(v);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
    return s;
}

inline Matrix parse_matrix(const FieldCtx& f, std::string_view text) {
    std::vector<Vec> rows;
    for (auto row : detail::split(detail::trim(text), ';')) {
        if (detail::trim(row).empty()) continue;
        Vec r;
        for (auto e : detail::split(row, ',')) r.push_back(parse_element(f, e));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw Error(ErrorKind::Parse, "empty matrix");
    const std::size_t cols = rows.front().size();
    for (const Vec& r : rows)
        if (r.size() != cols) throw Error(ErrorKind::Parse, "rows have different lengths");
    return Matrix::from_row_vectors(f, cols, rows);
}

inline std::string format_matrix(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += ";";
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? "," : "") + format_element(m.ctx(), m(r, c));
    }
    return s;
}

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const FieldCtx& f, const Json& j, std::size_t cols) {
    std::vector<Vec> rows;
    for (const auto& row : j) {
        Vec r;
        for (const auto& e : row) r.push_back(f.checked(e.get<unsigned>()));
        rows.push_back(std::move(r));
    }
    return Matrix::from_row_vectors(f, cols, rows);
}

inline Json vector_json(const Vec& v) {
    Json a = Json::array();
    for (Raw x : v) a.push_back(x);
    return a;
}

inline Json field_json(const FieldCtx& f) {
    Json j;
    j["q"] = f.q();
    j["modulus"] = f.modulus();
    return j;
}

inline FieldCtx field_from_json(const Json& j) {
    const FieldCtx base = FieldCtx::make(j.at("q").get<unsigned>());
    if (!j.contains("modulus") || j.at("modulus").is_null()) return base;
    return FieldCtx::make(base.p(), base.m(), j.at("modulus").get<Poly>());
}

inline Json code_json(const LinearCode& c) {
    Json j = field_json(c.ctx());
    j["n"] = c.n();
    j["k"] = c.k();
    j["gen"] = matrix_json(c.gen());
    return j;
}

inline LinearCode code_from_json(const Json& j) {
    try {
        const FieldCtx f = field_from_json(j);
        const std::size_t n = j.at("n").get<std::size_t>();
        const Matrix gen = matrix_from_json(f, j.at("gen"), n);
        if (gen.rows() != j.at("k").get<std::size_t>()) throw Error(ErrorKind::Parse, "k does not match gen rows");
        return LinearCode::from_generator(gen);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

inline Json special_set_json(const SpecialSet& s) {
    Json j;
    j["k"] = s.k();
    j["q"] = s.ctx().q();
    Json pts = Json::array();
    for (const auto& p : s.points()) pts.push_back(vector_json(p.rep()));
    j["points"] = std::move(pts);
    return j;
}

inline SpecialSet special_set_from_json(const Json& j, const FieldCtx& f) {
    try {
        const std::size_t k = j.at("k").get<std::size_t>();
        if (j.at("q").get<unsigned>() != f.q()) throw Error(ErrorKind::Parse, "special set over a different field");
        std::vector<ProjPoint> pts;
        for (const auto& p : j.at("points")) {
            Vec v;
            for (const auto& e : p) v.push_back(f.checked(e.get<unsigned>()));
            if (v.size() != k) throw Error(ErrorKind::Parse, "point of wrong dimension");
            pts.push_back(ProjPoint::of(f, v));
        }
        return SpecialSet::make(f, k, std::move(pts));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

inline Json step_json(const PathStep& s) {
    Json j;
    j["kind"] = to_string(s.kind);
    j["i"] = s.i;
    switch (s.kind) {
        case StepKind::Scale: j["a"] = s.scalar; break;
        case StepKind::Transpose: j["j"] = s.j; break;
        case StepKind::Swap:
            j["from"] = vector_json(s.old_functional);
            j["to"] = vector_json(s.new_functional);
            break;
    }
    j["witness"] = matrix_json(s.witness.basis());
    j["image"] = matrix_json(s.image.basis());
    return j;
}

inline Json certificate_json(const PathCertificate& p) {
    const LinearCode& c = p.vertices.front();
    Json j;
    Json params = field_json(c.ctx());
    params["n"] = c.n();
    params["k"] = c.k();
    j["params"] = std::move(params);
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(matrix_json(v.gen()));
    j["vertices"] = std::move(verts);
    Json steps = Json::array();
    for (const auto& s : p.steps) steps.push_back(step_json(s));
    j["steps"] = std::move(steps);
    j["swap_stages"] = p.swap_stages;
    j["compressed"] = p.compressed;
    return j;
}

/// Inverse of certificate_json; vertices and witnesses are re-canonicalized, nothing is trusted.
inline PathCertificate certificate_from_json(const Json& j) {
    try {
        const Json& params = j.at("params");
        const FieldCtx f = field_from_json(params);
        const std::size_t n = params.at("n").get<std::size_t>(), k = params.at("k").get<std::size_t>();
        PathCertificate p;
        for (const auto& v : j.at("vertices")) p.vertices.push_back(LinearCode::from_generator(matrix_from_json(f, v, n)));
        for (const auto& s : j.at("steps")) {
            const std::string kind = s.at("kind").get<std::string>();
            PathStep st{StepKind::Scale, s.at("i").get<std::size_t>(), 0, 0, {}, {},
                        Subspace::span(matrix_from_json(f, s.at("witness"), k)),
                        Subspace::span(matrix_from_json(f, s.at("image"), n))};
            if (kind == "scale") {
                st.scalar = f.checked(s.at("a").get<unsigned>());
            } else if (kind == "transpose") {
                st.kind = StepKind::Transpose;
                st.j = s.at("j").get<std::size_t>();
            } else if (kind == "swap") {
                st.kind = StepKind::Swap;
                for (const auto& e : s.at("from")) st.old_functional.push_back(f.checked(e.get<unsigned>()));
                for (const auto& e : s.at("to")) st.new_functional.push_back(f.checked(e.get<unsigned>()));
            } else {
                throw Error(ErrorKind::Parse, "unknown step kind '" + kind + "'");
            }
            p.steps.push_back(std::move(st));
        }
        p.swap_stages = j.at("swap_stages").get<std::size_t>();
        p.compressed = j.at("compressed").get<std::size_t>();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

inline Json report_json(const SubgraphReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["q"] = r.q;
    j["predicate"] = to_string(r.predicate);
    j["vertex_count"] = r.vertex_count;
    j["component_count"] = r.component_count;
    j["component_sizes"] = r.component_sizes;
    j["diameter_within"] = r.diameter_within;
    j["grassmann_diameter"] = r.grassmann_diameter;
    j["detour_pairs"] = r.detour_pairs;
    j["pair_count"] = r.pair_count;
    return j;
}

}  // namespace projconn::io
