#include "cartinc/io.hpp"
#include <set>
#include <unordered_map>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cartinc {

using nlohmann::json;

bool Instance::is_real() const {
    for (const auto& v : points.A)
        if (!v.is_real()) return false;
    for (const auto& v : points.B)
        if (!v.is_real()) return false;
    for (const auto& c : curves.curves())
        for (const auto& [e, coeff] : c.poly.terms())
            if (!coeff.is_real()) return false;
    return true;
}

CartesianPointSet<Rational> Instance::real_points() const {
    if (!is_real()) fail(Err::InvalidArgument, "instance is not real");
    std::vector<Rational> a, b;
    for (const auto& v : points.A) a.push_back(v.re);
    for (const auto& v : points.B) b.push_back(v.re);
    return CartesianPointSet<Rational>::from_values(std::move(a), std::move(b));
}

CurveFamily<Rational> Instance::real_curves() const {
    if (!is_real()) fail(Err::InvalidArgument, "instance is not real");
    std::vector<LabeledCurve<Rational>> out;
    for (const auto& c : curves.curves()) {
        RationalBiPoly f;
        for (const auto& [e, coeff] : c.poly.terms()) f.add_term(e.first, e.second, coeff.re);
        out.push_back({c.label, std::move(f)});
    }
    return CurveFamily<Rational>(std::move(out));
}

SetKind parse_set_kind(const std::string& name) {
    if (name == "arithmetic") return SetKind::arithmetic;
    if (name == "geometric") return SetKind::geometric;
    if (name == "random") return SetKind::random;
    fail(Err::InvalidArgument, "unknown set kind '" + name + "'");
}

namespace {

const char* kind_name(SetKind k) {
    switch (k) {
        case SetKind::arithmetic: return "arithmetic";
        case SetKind::geometric: return "geometric";
        case SetKind::random: return "random";
    }
    return "?";
}

std::vector<GaussianRational> generate_factor_set(SetKind kind, int n, DetRng& rng) {
    std::vector<GaussianRational> out;
    switch (kind) {
        case SetKind::arithmetic:
            for (int i = 1; i <= n; ++i) out.emplace_back(Rational(i));
            break;
        case SetKind::geometric: {
            Integer v = 1;
            for (int i = 0; i < n; ++i) {
                out.emplace_back(Rational(v));
                v <<= 1;
            }
            break;
        }
        case SetKind::random: {
            std::set<Rational> seen;
            while (static_cast<int>(seen.size()) < n)
                seen.insert(make_rational(rng.range(-1000, 1000), rng.range(1, 1000)));
            for (const auto& v : seen) out.emplace_back(v);
            break;
        }
    }
    return out;
}

/// Curves planted through grid points keep incidence counts interesting;
/// interleaved with sparse random polynomials for coverage.
GaussianBiPoly generate_curve(const CartesianPointSet<GaussianRational>& pts, int max_degree,
                              DetRng& rng) {
    auto pick_a = [&] { return pts.A[rng.below(pts.A.size())]; };
    auto pick_b = [&] { return pts.B[rng.below(pts.B.size())]; };
    const GaussianRational one(Rational(1));
    GaussianBiPoly f;
    switch (rng.below(max_degree >= 2 ? 4 : 2)) {
        case 0: {  // secant line through two grid points (generic position)
            GaussianRational a0 = pick_a(), a1 = pick_a(), b0 = pick_b(), b1 = pick_b();
            if (a0 == a1 || b0 == b1) {
                f.add_term(0, 1, one);
                f.add_term(1, 0, -one);
                f.add_term(0, 0, b0 - a0);  // parallel shift through (a0, b0)
            } else {
                f.add_term(0, 1, a1 - a0);
                f.add_term(0, 0, -b0 * (a1 - a0) + a0 * (b1 - b0));
                f.add_term(1, 0, -(b1 - b0));
            }
            break;
        }
        case 1: {  // random sparse polynomial
            int terms = 2 + static_cast<int>(rng.below(4));
            while (f.is_zero_poly()) {
                for (int t = 0; t < terms; ++t) {
                    int i = static_cast<int>(rng.below(max_degree + 1));
                    int j = static_cast<int>(rng.below(max_degree + 1 - i));
                    f.add_term(i, j, GaussianRational(Rational(rng.range(-5, 5))));
                }
            }
            break;
        }
        case 2: {  // parabola y = b0 + k (x - a0)(x - a1) through (a0, b0)
            GaussianRational a0 = pick_a(), a1 = pick_a(), b0 = pick_b();
            GaussianRational k(Rational(rng.range(1, 3)));
            f.add_term(0, 1, one);
            f.add_term(2, 0, -k);
            f.add_term(1, 0, k * (a0 + a1));
            f.add_term(0, 0, -b0 - k * a0 * a1);
            break;
        }
        default: {  // graph y = b0 + k (x - a0)(x - a1)(x - a2), degree 3
            GaussianRational a0 = pick_a(), a1 = pick_a(), a2 = pick_a(), b0 = pick_b();
            GaussianRational k(Rational(rng.range(1, 2)));
            if (max_degree < 3) {
                f.add_term(0, 1, one);
                f.add_term(0, 0, -b0);
                f.add_term(1, 0, -k);
                f.add_term(0, 0, k * a0);
                break;
            }
            f.add_term(0, 1, one);
            f.add_term(3, 0, -k);
            f.add_term(2, 0, k * (a0 + a1 + a2));
            f.add_term(1, 0, -k * (a0 * a1 + a0 * a2 + a1 * a2));
            f.add_term(0, 0, -b0 + k * a0 * a1 * a2);
            break;
        }
    }
    return f;
}

}  // namespace

Instance generate_instance(SetKind kind, int n, std::uint64_t seed, int n_curves,
                           int max_degree) {
    if (n < 1) fail(Err::InvalidArgument, "n must be >= 1");
    if (max_degree < 1) fail(Err::InvalidArgument, "max degree must be >= 1");
    DetRng rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    Instance inst;
    inst.seed = seed;
    inst.generator = kind_name(kind);
    inst.name = std::string(kind_name(kind)) + "-" + std::to_string(n) + "-s" +
                std::to_string(seed);

    auto a = generate_factor_set(kind, n, rng);
    auto b = kind == SetKind::random ? generate_factor_set(kind, n, rng) : a;
    inst.points = CartesianPointSet<GaussianRational>::from_values(std::move(a), std::move(b));

    std::vector<LabeledCurve<GaussianRational>> curves;
    for (int c = 0; c < n_curves; ++c)
        curves.push_back(
            {"C" + std::to_string(c + 1), generate_curve(inst.points, max_degree, rng)});
    inst.curves = CurveFamily<GaussianRational>(std::move(curves));
    return inst;
}

namespace {

GaussianRational parse_coeff(const json& value, const std::string& where) {
    if (!value.is_string())
        fail(Err::ParseError, where + ": coefficient must be a GR string");
    try {
        return parse_gaussian(value.get<std::string>());
    } catch (const WorkbenchError& e) {
        fail(Err::ParseError, where + ": " + e.what(), e.offset());
    }
}

std::vector<GaussianRational> parse_point_list(const json& arr, const std::string& name) {
    if (!arr.is_array()) fail(Err::ParseError, name + " must be an array of GR strings");
    std::vector<GaussianRational> out;
    std::unordered_map<GaussianRational, std::size_t, GaussianHash> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        GaussianRational v = parse_coeff(arr[i], name + "[" + std::to_string(i) + "]");
        auto [it, fresh] = seen.emplace(v, i);
        if (!fresh)
            fail(Err::DuplicatePoint, name + "[" + std::to_string(i) + "] duplicates " + name +
                                          "[" + std::to_string(it->second) + "] = " +
                                          format_gaussian(v));
        out.push_back(std::move(v));
    }
    return out;
}

GaussianBiPoly parse_poly_json(const json& node, const std::string& where) {
    if (!node.contains("terms") || !node["terms"].is_array())
        fail(Err::ParseError, where + ": missing terms array");
    GaussianBiPoly f;
    std::set<std::pair<int, int>> seen;
    for (std::size_t t = 0; t < node["terms"].size(); ++t) {
        const json& term = node["terms"][t];
        std::string at = where + ".terms[" + std::to_string(t) + "]";
        if (!term.contains("i") || !term.contains("j") || !term.contains("c"))
            fail(Err::ParseError, at + ": term needs i, j, c");
        int i = term["i"].get<int>();
        int j = term["j"].get<int>();
        if (i < 0 || j < 0) fail(Err::ParseError, at + ": negative exponent");
        if (!seen.insert({i, j}).second)
            fail(Err::ParseError, at + ": duplicate exponent pair");
        f.add_term(i, j, parse_coeff(term["c"], at));
    }
    if (f.is_zero_poly()) fail(Err::ZeroPolynomial, where + " encodes the zero polynomial");
    return f;
}

json poly_to_json(const GaussianBiPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"i", e.first}, {"j", e.second}, {"c", format_gaussian(c)}});
    return {{"terms", terms}};
}

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) fail(Err::ParseError, "instance must be a JSON object");
    Instance inst;
    inst.name = doc.value("name", std::string("unnamed"));
    inst.seed = doc.value("seed", 0ULL);
    inst.generator = doc.value("generator", std::string("file"));
    if (!doc.contains("A") || !doc.contains("B"))
        fail(Err::ParseError, "instance needs A and B arrays");
    auto a = parse_point_list(doc["A"], "A");
    auto b = parse_point_list(doc["B"], "B");
    inst.points = CartesianPointSet<GaussianRational>::from_lists(std::move(a), std::move(b));

    std::vector<LabeledCurve<GaussianRational>> curves;
    if (doc.contains("curves")) {
        if (!doc["curves"].is_array()) fail(Err::ParseError, "curves must be an array");
        for (std::size_t c = 0; c < doc["curves"].size(); ++c) {
            const json& node = doc["curves"][c];
            std::string where = "curves[" + std::to_string(c) + "]";
            if (!node.contains("label") || !node["label"].is_string())
                fail(Err::ParseError, where + ": missing label");
            curves.push_back(
                {node["label"].get<std::string>(), parse_poly_json(node, where)});
        }
    }
    inst.curves = CurveFamily<GaussianRational>(std::move(curves));
    return inst;
}

json instance_to_json(const Instance& inst) {
    json a = json::array(), b = json::array(), curves = json::array();
    for (const auto& v : inst.points.A) a.push_back(format_gaussian(v));
    for (const auto& v : inst.points.B) b.push_back(format_gaussian(v));
    for (const auto& c : inst.curves.curves()) {
        json node = poly_to_json(c.poly);
        node["label"] = c.label;
        curves.push_back(node);
    }
    return {{"name", inst.name}, {"seed", inst.seed}, {"generator", inst.generator},
            {"A", a},           {"B", b},            {"curves", curves}};
}

json parse_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(Err::ParseError, "malformed JSON");
    return doc;
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
    return instance_from_json(parse_json_text(text));
}

Instance parse_instance_file(const std::string& path) {
    return parse_instance_text(read_file(path));
}

std::string instance_to_json_text(const Instance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

GaussianBiPoly poly_from_json_text(const std::string& text) {
    return parse_poly_json(parse_json_text(text), "polynomial");
}

GaussianBiPoly poly_from_json_file(const std::string& path) {
    return poly_from_json_text(read_file(path));
}

std::string poly_to_json_text(const GaussianBiPoly& f) {
    return poly_to_json(f).dump(2) + "\n";
}

std::string graph_to_csv(const IncidenceGraph& graph, const Instance& inst) {
    std::ostringstream os;
    os << "label,iA,iB,a,b\n";
    for (const auto& e : graph.edges())
        os << graph.labels()[e.curve] << "," << e.ia << "," << e.ib << ","
           << format_gaussian(inst.points.A[e.ia]) << ","
           << format_gaussian(inst.points.B[e.ib]) << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Err::IoError, "cannot write '" + tmp + "'");
        out << content;
        if (!out.good()) fail(Err::IoError, "short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail(Err::IoError, "cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace cartinc
