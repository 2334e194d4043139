#include "cyclocover/builtins.hpp"

#include "cyclocover/errors.hpp"

namespace cyclocover {

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"circle", "wedge2", "trefoil", "figure8", "phi3"};
    return names;
}

std::optional<Presentation> builtin_presentation(std::string_view name, Field field) {
    if (name == "circle") return Presentation::make(field, "x", {}, {1});
    if (name == "wedge2") return Presentation::make(field, "xy", {}, {1, 1});
    // xyx = yxy
    if (name == "trefoil") return Presentation::make(field, "xy", {"xyxYXY"}, {1, 1});
    // Two-bridge presentation of 4_1: y x Y x y = x y X y x
    if (name == "figure8") return Presentation::make(field, "xy", {"yxYxyXYxYX"}, {1, 1});
    return std::nullopt;
}

ChainComplexOverR builtin_complex(std::string_view name, Field field) {
    if (auto p = builtin_presentation(name, field)) return presentation_to_complex(*p);
    if (name == "phi3") {
        RMatrix d1(field, 1, 1);
        d1(0, 0) = LaurentPoly::from_coefficients(field, 0, {1, 1, 1});
        return ChainComplexOverR(field, {1, 1}, {d1});
    }
    throw InputError("unknown builtin '" + std::string(name) + "'");
}

} // namespace cyclocover
