#include "linarr/catalog.hpp"

#include <optional>

#include "linarr/error.hpp"
#include "linarr/parse.hpp"

namespace linarr {

namespace {

void append_family(std::vector<ProjLine>& lines, unsigned m, int va, int vb) {
    // lines of (u^m - v^m): u - zeta^j v
    for (unsigned j = 0; j < m; ++j) {
        std::array<Scalar, 3> c{Scalar(0), Scalar(0), Scalar(0)};
        c[static_cast<std::size_t>(va)] = Scalar(1);
        c[static_cast<std::size_t>(vb)] = -Scalar::zeta(m, j);
        lines.emplace_back(c[0], c[1], c[2]);
    }
}

std::vector<ProjLine> fermat_lines(unsigned m) {
    std::vector<ProjLine> lines;
    lines.reserve(3 * m);
    append_family(lines, m, 0, 1); // x^m - y^m
    append_family(lines, m, 1, 2); // y^m - z^m
    append_family(lines, m, 2, 0); // z^m - x^m
    return lines;
}

unsigned parse_unsigned_param(const std::map<std::string, std::string>& params,
                              const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw MathError("catalog parameter \"" + key + "\" is required");
    const std::string& s = it->second;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw MathError("catalog parameter \"" + key + "\" must be a natural number, got \"" + s + "\"");
    return static_cast<unsigned>(std::stoul(s));
}

std::optional<unsigned> parse_optional_unsigned(const std::map<std::string, std::string>& params,
                                                const std::string& key) {
    if (!params.count(key)) return std::nullopt;
    return parse_unsigned_param(params, key);
}

} // namespace

Arrangement fermat_arrangement(unsigned m) {
    if (m < 3) throw MathError("fermat arrangement needs m >= 3");
    return Arrangement(fermat_lines(m), "fermat(" + std::to_string(m) + ")");
}

Arrangement fermat_plus_x(unsigned m) {
    if (m < 3) throw MathError("fermat+x arrangement needs m >= 3");
    std::vector<ProjLine> lines{ProjLine(Scalar(1), Scalar(0), Scalar(0))};
    auto fam = fermat_lines(m);
    lines.insert(lines.end(), fam.begin(), fam.end());
    return Arrangement(std::move(lines), "fermat+x(" + std::to_string(m) + ")");
}

Arrangement fermat_plus_xy(unsigned m) {
    if (m < 3) throw MathError("fermat+xy arrangement needs m >= 3");
    std::vector<ProjLine> lines{ProjLine(Scalar(1), Scalar(0), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(1), Scalar(0))};
    auto fam = fermat_lines(m);
    lines.insert(lines.end(), fam.begin(), fam.end());
    return Arrangement(std::move(lines), "fermat+xy(" + std::to_string(m) + ")");
}

Arrangement full_monomial(unsigned m) {
    if (m < 3) throw MathError("full monomial arrangement needs m >= 3");
    std::vector<ProjLine> lines{ProjLine(Scalar(1), Scalar(0), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(1), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(0), Scalar(1))};
    auto fam = fermat_lines(m - 2);
    lines.insert(lines.end(), fam.begin(), fam.end());
    return Arrangement(std::move(lines), "full_monomial(" + std::to_string(m) + ")");
}

Arrangement monomial_sub(unsigned m, unsigned k, const std::vector<Scalar>& w) {
    if (m < 3) throw MathError("monomial_sub needs m >= 3");
    const unsigned n = m - 2;
    if (k >= n) throw MathError("monomial_sub needs 0 <= k < m-2");
    if (w.size() != k)
        throw MathError("monomial_sub needs exactly k = " + std::to_string(k) + " w-values");
    for (std::size_t i = 0; i < w.size(); ++i) {
        Scalar p(1);
        for (unsigned t = 0; t < n; ++t) p *= w[i];
        if (!(p == Scalar(1)))
            throw MathError("w[" + std::to_string(i) + "] is not an " + std::to_string(n) +
                            "-th root of unity");
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) throw MathError("repeated w-value: the entries must be distinct");
    }

    std::vector<ProjLine> lines{ProjLine(Scalar(1), Scalar(0), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(1), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(0), Scalar(1))};
    append_family(lines, n, 0, 1); // x^n - y^n
    append_family(lines, n, 0, 2); // x^n - z^n
    for (const Scalar& wj : w)
        lines.emplace_back(Scalar(0), -wj, Scalar(1)); // z - w_j y
    return Arrangement(std::move(lines),
                       "monomial_sub(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

Arrangement b3_arrangement() {
    auto a = full_monomial(4);
    return Arrangement(a.lines(), "B3");
}

Arrangement hessian_arrangement() {
    std::vector<ProjLine> lines{ProjLine(Scalar(1), Scalar(0), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(1), Scalar(0)),
                                ProjLine(Scalar(0), Scalar(0), Scalar(1))};
    for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b)
            lines.emplace_back(Scalar(1), Scalar::zeta(3, a), Scalar::zeta(3, b));
    return Arrangement(std::move(lines), "hessian");
}

Arrangement hessian_minus(std::size_t line_index) {
    auto h = hessian_arrangement();
    if (line_index >= h.size()) throw MathError("hessian has 12 lines; index out of range");
    auto del = delete_line(h, line_index);
    return Arrangement(del.lines(), "hessian_minus(" + std::to_string(line_index) + ")");
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"fermat", "m>=3", "(x^m-y^m)(y^m-z^m)(z^m-x^m), d=3m"},
        {"fermat+x", "m>=3", "fermat plus the line x=0, d=3m+1"},
        {"fermat+xy", "m>=3", "fermat plus the lines x=0 and y=0, d=3m+2"},
        {"full_monomial", "m>=3", "xyz times fermat(m-2), d=3m-3"},
        {"monomial_sub", "m>=3 k<m-2 w=<k roots of unity>",
         "xyz(x^n-y^n)(x^n-z^n)prod(z-w_j*y), n=m-2, d=2m-1+k"},
        {"B3", "", "the 9-line B3 arrangement (= full_monomial m=4)"},
        {"hessian", "", "xyz((x^3+y^3+z^3)^3-27x^3y^3z^3), d=12"},
        {"hessian_minus", "line<12", "hessian with one line deleted, d=11"},
    };
    return entries;
}

Arrangement catalog_build(const std::string& name,
                          const std::map<std::string, std::string>& params) {
    if (name == "fermat") return fermat_arrangement(parse_unsigned_param(params, "m"));
    if (name == "fermat+x") return fermat_plus_x(parse_unsigned_param(params, "m"));
    if (name == "fermat+xy") return fermat_plus_xy(parse_unsigned_param(params, "m"));
    if (name == "full_monomial") return full_monomial(parse_unsigned_param(params, "m"));
    if (name == "monomial_sub") {
        unsigned m = parse_unsigned_param(params, "m");
        unsigned k = parse_unsigned_param(params, "k");
        std::vector<Scalar> w;
        if (auto it = params.find("w"); it != params.end() && !it->second.empty()) {
            for (const std::string& part : split_top_level(it->second, ','))
                w.push_back(parse_scalar(part));
        }
        return monomial_sub(m, k, w);
    }
    if (name == "B3") return b3_arrangement();
    if (name == "hessian") return hessian_arrangement();
    if (name == "hessian_minus")
        return hessian_minus(parse_optional_unsigned(params, "line").value_or(0));
    throw MathError("unknown catalog name \"" + name + "\"");
}

} // namespace linarr
