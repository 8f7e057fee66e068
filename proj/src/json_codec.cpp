#include "realforms/json_codec.hpp"

#include <sstream>
#include <stdexcept>

namespace realforms {

namespace {

template <class T>
ExactMatrix<T> decode_matrix(const Json& j, T (*parse)(const std::string&)) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw std::invalid_argument("matrix JSON: entries must have rows*cols items");
    std::vector<T> parsed;
    parsed.reserve(entries.size());
    for (const auto& e : entries) parsed.push_back(parse(e.get<std::string>()));
    ExactMatrix<T> m(rows, cols, parsed[0]);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parsed[i * cols + k];
    return m;
}

Rational parse_rational_str(const std::string& s) { return Rational::parse(s); }
GaussRational parse_gauss_str(const std::string& s) { return GaussRational::parse(s); }
Quaternion parse_quaternion_str(const std::string& s) { return Quaternion::parse(s); }
CycloElement parse_cyclo_str(const std::string& s) { return CycloElement::parse(s); }

}  // namespace

Json matrix_to_json(const MatrixVariant& m) {
    return std::visit([](const auto& mm) { return matrix_to_json(mm); }, m);
}

MatrixVariant matrix_from_json(const Json& j) {
    std::string scalar = j.at("scalar").get<std::string>();
    if (scalar == "rational") return decode_matrix<Rational>(j, parse_rational_str);
    if (scalar == "gauss") return decode_matrix<GaussRational>(j, parse_gauss_str);
    if (scalar == "quaternion")
        return decode_matrix<Quaternion>(j, parse_quaternion_str);
    if (scalar == "cyclo") return decode_matrix<CycloElement>(j, parse_cyclo_str);
    throw std::invalid_argument("matrix JSON: unknown scalar '" + scalar + "'");
}

template <>
ExactMatrix<Rational> matrix_from_json_as<Rational>(const Json& j) {
    auto v = matrix_from_json(j);
    if (auto* m = std::get_if<ExactMatrix<Rational>>(&v)) return *m;
    throw std::invalid_argument("matrix JSON: rational scalar expected");
}
template <>
ExactMatrix<GaussRational> matrix_from_json_as<GaussRational>(const Json& j) {
    auto v = matrix_from_json(j);
    if (auto* m = std::get_if<ExactMatrix<GaussRational>>(&v)) return *m;
    if (auto* m = std::get_if<ExactMatrix<Rational>>(&v)) return to_gauss(*m);
    throw std::invalid_argument("matrix JSON: gauss scalar expected");
}
template <>
ExactMatrix<Quaternion> matrix_from_json_as<Quaternion>(const Json& j) {
    auto v = matrix_from_json(j);
    if (auto* m = std::get_if<ExactMatrix<Quaternion>>(&v)) return *m;
    throw std::invalid_argument("matrix JSON: quaternion scalar expected");
}

Json form_to_json(const FormSpec& f) {
    Json gram = std::visit([](const auto& g) { return matrix_to_json(g.gram); }, f);
    return Json{{"kind", form_kind_name(kind_of(f))}, {"gram", gram}};
}

FormSpec form_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    const Json& gram = j.at("gram");
    if (kind == "quadratic")
        return QuadraticForm(matrix_from_json_as<Rational>(gram));
    if (kind == "hermitian")
        return HermitianForm(matrix_from_json_as<GaussRational>(gram));
    if (kind == "quat_hermitian")
        return QuatHermitianForm(matrix_from_json_as<Quaternion>(gram));
    if (kind == "quat_antihermitian")
        return QuatAntiHermitianForm(matrix_from_json_as<Quaternion>(gram));
    throw std::invalid_argument("form JSON: unknown kind '" + kind + "'");
}

Json action_to_json(const ConjAction& a) {
    Json j{{"tag", conj_action_name(a.tag)}, {"n", a.n}};
    if (a.tag == ConjActionTag::unitary_twist) j["p"] = a.p;
    return j;
}

ConjAction action_from_json(const Json& j) {
    std::string tag = j.at("tag").get<std::string>();
    int n = j.at("n").get<int>();
    if (tag == "plain") return ConjAction::plain(n);
    if (tag == "quaternion_twist") return ConjAction::quaternion_twist(n);
    if (tag == "unitary_twist")
        return ConjAction::unitary_twist(n, j.at("p").get<int>());
    throw std::invalid_argument("action JSON: unknown tag '" + tag + "'");
}

Json cocycle_to_json(const Cocycle& x) {
    return Json{{"action", action_to_json(x.action)}, {"B", matrix_to_json(x.B)}};
}

Cocycle cocycle_from_json(const Json& j) {
    return Cocycle{action_from_json(j.at("action")),
                   matrix_from_json_as<GaussRational>(j.at("B"))};
}

Json descriptor_to_json(const GroupDescriptor& g) {
    Json j{{"variant", family_name(g.family)}};
    switch (g.family) {
        case GroupFamily::sl_k:
        case GroupFamily::sp_k:
            j["n"] = g.n;
            break;
        case GroupFamily::sl_h:
        case GroupFamily::su_h_antihermitian:
            j["m"] = g.n;
            break;
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
        case GroupFamily::su_h_hermitian:
            j["n"] = g.n;
            j["p"] = g.p;
            break;
        case GroupFamily::g2:
            j["form"] = g.form == kG2Compact ? "compact" : "split";
            break;
        case GroupFamily::f4:
        case GroupFamily::e8:
            j["form"] = g.form;
            break;
    }
    return j;
}

GroupDescriptor descriptor_from_json(const Json& j) {
    auto fam = family_from_name(j.at("variant").get<std::string>());
    if (!fam)
        throw std::invalid_argument("descriptor JSON: unknown variant '" +
                                    j.at("variant").get<std::string>() + "'");
    GroupDescriptor g{*fam, 0, 0, 0};
    switch (*fam) {
        case GroupFamily::sl_k:
        case GroupFamily::sp_k:
            g.n = j.at("n").get<int>();
            break;
        case GroupFamily::sl_h:
        case GroupFamily::su_h_antihermitian:
            g.n = j.at("m").get<int>();
            break;
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
        case GroupFamily::su_h_hermitian:
            g.n = j.at("n").get<int>();
            g.p = j.at("p").get<int>();
            break;
        case GroupFamily::g2: {
            std::string f = j.at("form").get<std::string>();
            if (f == "compact")
                g.form = kG2Compact;
            else if (f == "split")
                g.form = kG2Split;
            else
                throw std::invalid_argument("descriptor JSON: g2 form must be "
                                            "'compact' or 'split'");
            break;
        }
        case GroupFamily::f4:
        case GroupFamily::e8:
            g.form = j.at("form").get<int>();
            break;
    }
    validate(g);
    return g;
}

Json classification_to_json(const ClassificationResult& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes)
        classes.push_back(Json{{"label", c.label},
                               {"group", descriptor_to_json(c.galois_group)}});
    return Json{{"input", descriptor_to_json(r.input)},
                {"count", r.count},
                {"classes", classes}};
}

namespace {

void render_into(const Json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_into(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& e : j) {
            render_into(e, path + "[" + std::to_string(i) + "]", os);
            ++i;
        }
        if (j.empty()) os << path << " = []\n";
    } else {
        os << path << " = " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render_into(j, "", os);
    return os.str();
}

}  // namespace realforms
