#include "hjj/report.hpp"

namespace hjj {

std::string format_vector(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

std::string format_indices(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(idx[i] + 1);
    }
    return s + ")";
}

std::string CheckReport::summary() const {
    if (passed())
        return name + ": pass";
    const auto& v = violations.front();
    std::string s = name + ": FAIL (" + std::to_string(violations.size()) + " violation" +
                    (violations.size() == 1 ? "" : "s") + "), first at " + format_indices(v.indices) +
                    ": residual " + format_vector(v.residual);
    if (!v.note.empty())
        s += " " + v.note;
    return s;
}

}  // namespace hjj
