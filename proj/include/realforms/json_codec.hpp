#pragma once

#include "realforms/classify.hpp"
#include "realforms/cohomology.hpp"
#include "realforms/forms.hpp"

#include "json.hpp"

#include <variant>

namespace realforms {

using Json = nlohmann::json;

using MatrixVariant = std::variant<ExactMatrix<Rational>, ExactMatrix<GaussRational>,
                                   ExactMatrix<Quaternion>, ExactMatrix<CycloElement>>;

/// Matrix interchange encoding: {rows, cols, scalar, entries} with entries as
/// canonical scalar strings in row-major order.
template <class T>
Json matrix_to_json(const ExactMatrix<T>& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).str());
    return Json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"scalar", scalar_traits<T>::name},
                {"entries", entries}};
}

Json matrix_to_json(const MatrixVariant& m);
MatrixVariant matrix_from_json(const Json& j);

template <class T>
ExactMatrix<T> matrix_from_json_as(const Json& j);

Json form_to_json(const FormSpec& f);
FormSpec form_from_json(const Json& j);

Json action_to_json(const ConjAction& a);
ConjAction action_from_json(const Json& j);

Json cocycle_to_json(const Cocycle& x);
Cocycle cocycle_from_json(const Json& j);

Json descriptor_to_json(const GroupDescriptor& g);
GroupDescriptor descriptor_from_json(const Json& j);

Json classification_to_json(const ClassificationResult& r);

/// Lossless flat text rendering of a JSON document, one "path = value" line
/// per leaf, in canonical (sorted-key) order.
std::string render_text(const Json& j);

}  // namespace realforms
