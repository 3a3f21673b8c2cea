#include "plucker/format.hpp"

namespace plucker {

namespace {

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (int pos = 0; pos < m.width(); ++pos) {
        std::int64_t e = m.exponent(pos);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += (pos % 2 == 0 ? "x" : "y") + std::to_string(pos / 2 + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string tableau_text(const Tableau& t) {
    std::string out;
    const auto& cols = t.columns();
    for (std::size_t k = 0; k < cols.size();) {
        std::size_t run = k;
        while (run < cols.size() && cols[run] == cols[k]) ++run;
        if (!out.empty()) out += "*";
        out += "[" + std::to_string(cols[k].i) + "," + std::to_string(cols[k].j) + "]";
        if (run - k > 1) out += "^" + std::to_string(run - k);
        k = run;
    }
    return out;
}

// Renders c * body with sign-aware joining over Q; residues never carry a
// sign and always join with " + ".
struct TermWriter {
    std::string out;

    static bool first_factor_powered(const std::string& body) {
        std::size_t star = body.find('*');
        std::size_t caret = body.find('^');
        return caret != std::string::npos &&
               (star == std::string::npos || caret < star);
    }

    void add(const Scalar& c, const std::string& body) {
        bool negative = c.is_rational() && c.rat() < 0;
        Scalar mag = negative ? -c : c;
        bool leading = out.empty();
        if (leading) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool elide_one = mag.is_one() && !body.empty();
        // A leading "-x1^2" would re-parse as (-x1)^2 under the grammar
        // (unary minus is an atom), so spell the coefficient out.
        if (leading && negative && elide_one && first_factor_powered(body))
            elide_one = false;
        if (body.empty())
            out += mag.str();
        else if (elide_one)
            out += body;
        else
            out += mag.str() + "*" + body;
    }

    std::string finish() { return out.empty() ? "0" : std::move(out); }
};

}  // namespace

std::string to_text(const Polynomial& p) {
    TermWriter w;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        w.add(it->second, monomial_text(it->first));
    return w.finish();
}

std::string to_text(const BracketPolynomial& b) {
    TermWriter w;
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it)
        w.add(it->second, tableau_text(it->first));
    return w.finish();
}

nlohmann::ordered_json json_integer(const mpz_class& v) {
    static const mpz_class safe_max = (mpz_class(1) << 53);
    if (v <= safe_max && v >= -safe_max)
        return nlohmann::ordered_json(v.get_si());
    return nlohmann::ordered_json(v.get_str());
}

nlohmann::ordered_json json_scalar(const Scalar& s) {
    if (!s.is_rational())
        return json_integer(mpz_class(static_cast<unsigned long>(s.res())));
    if (s.rat().get_den() == 1) return json_integer(s.rat().get_num());
    return nlohmann::ordered_json(s.str());
}

}  // namespace plucker
