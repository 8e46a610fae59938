#include "hjj/scalar.hpp"

#include "hjj/errors.hpp"

#include <regex>

namespace hjj {

Scalar parse_scalar(std::string_view text) {
    static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
    std::string s(text);
    if (!std::regex_match(s, pattern))
        throw InvalidInput("not a rational literal: \"" + s + "\"");
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1));
        if (den == 0)
            throw InvalidInput("zero denominator: \"" + std::string(text) + "\"");
    }
    Scalar q(s, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_str(10);
}

}  // namespace hjj
