#include "cbn/rational.hpp"

#include <cctype>

#include "cbn/errors.hpp"

namespace cbn {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);

    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad_literal(text);

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_literal(text);
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        result = Rational(n, d);
        result.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_literal(text);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad_literal(text);
        mpz_class digits(std::string(whole) + std::string(frac), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(digits, scale);
        result.canonicalize();
    } else {
        if (!all_digits(body)) bad_literal(text);
        result = Rational(mpz_class(std::string(body), 10));
    }
    if (negative) result = -result;
    return result;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational total_variation(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw InvalidArgument("total_variation: size mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += abs(a[i] - b[i]);
    return sum / 2;
}

std::string to_string(std::span<const Rational> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += '"' + to_string(values[i]) + '"';
    }
    return out + "]";
}

}  // namespace cbn
