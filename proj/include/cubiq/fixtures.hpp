#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "cubiq/cubic_surface.hpp"
#include "cubiq/gauss.hpp"

namespace cubiq {

// Built-in surfaces. Smoothness provenance:
//   F1  y^2 w - x^3 + z^3 + z w^2.  Smooth over the closure: the gradient
//       system (-3x^2, 2yw, 3z^2 + w^2, y^2 + 2zw) = 0 forces x = 0, then
//       w^2 = -3z^2 and yw = 0 and y^2 = -2zw; w = 0 gives z = 0 and y = 0,
//       while y = 0 gives zw = 0 and again z = w = 0.  No projective zero.
//       The z = 0 section is the cuspidal cubic y^2 w = x^3 with rational
//       parametrisation P(t) = (t : 1 : 0 : t^3); P(t1), P(t2), P(t3) are
//       collinear iff t1 + t2 + t3 = 0.
//   F2  Fermat cubic x^3 + y^3 + z^3 + w^3, classically smooth (gradient
//       3(x^2, y^2, z^2, w^2) has no projective zero in characteristic 0).
//   F3  x(x - w)(x + w): three collinear planes (common line x = w = 0).
//   F4  xyw: three planes with no common line.
//   F5  (x^2 + y^2 + z^2 + w^2) x over Q(i): smooth quadric plus a plane.
inline CubicSurface<Rat> fixture_f1() {
    CubicSurface<Rat> s;
    s.name = "F1";
    s.form.set_term(0, 2, 0, 1, Rat(1));   // y^2 w
    s.form.set_term(3, 0, 0, 0, Rat(-1));  // -x^3
    s.form.set_term(0, 0, 3, 0, Rat(1));   // z^3
    s.form.set_term(0, 0, 1, 2, Rat(1));   // z w^2
    s.certificate = {SmoothnessCertificate::Kind::asserted,
                     "gradient system has no projective zero over the closure"};
    return s;
}

inline CubicSurface<Rat> fixture_f2() {
    CubicSurface<Rat> s;
    s.name = "F2";
    s.form.set_term(3, 0, 0, 0, Rat(1));
    s.form.set_term(0, 3, 0, 0, Rat(1));
    s.form.set_term(0, 0, 3, 0, Rat(1));
    s.form.set_term(0, 0, 0, 3, Rat(1));
    s.certificate = {SmoothnessCertificate::Kind::asserted, "Fermat cubic"};
    return s;
}

inline CubicSurface<Rat> fixture_f3() {
    CubicSurface<Rat> s;
    s.name = "F3";
    s.form.set_term(3, 0, 0, 0, Rat(1));   // x^3
    s.form.set_term(1, 0, 0, 2, Rat(-1));  // -x w^2
    s.certificate = {SmoothnessCertificate::Kind::asserted,
                     "three distinct planes, each smooth"};
    return s;
}

inline CubicSurface<Rat> fixture_f4() {
    CubicSurface<Rat> s;
    s.name = "F4";
    s.form.set_term(1, 1, 0, 1, Rat(1));  // xyw
    s.certificate = {SmoothnessCertificate::Kind::asserted,
                     "three distinct planes, each smooth"};
    return s;
}

inline CubicSurface<GaussRat> fixture_f5() {
    CubicSurface<GaussRat> s;
    s.name = "F5";
    s.form.set_term(3, 0, 0, 0, GaussRat(1));
    s.form.set_term(1, 2, 0, 0, GaussRat(1));
    s.form.set_term(1, 0, 2, 0, GaussRat(1));
    s.form.set_term(1, 0, 0, 2, GaussRat(1));
    s.certificate = {SmoothnessCertificate::Kind::asserted,
                     "smooth quadric plus a plane, components smooth"};
    return s;
}

// P(t) = (t : 1 : 0 : t^3) on the z = 0 section of F1.
inline ProjPoint<Rat> cusp_point(const Rat& t) {
    return ProjPoint<Rat>(t, Rat(1), Rat(0), t * t * t);
}

// Fixture file format: optional "field: Q" / "field: Q(i)" header, then one
// monomial per line as "i j k l : coefficient"; '#' starts a comment.
inline std::string sniff_surface_field(std::istream& in) {
    std::string field = "Q";
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "field:") {
            std::string f;
            ls >> f;
            return f;
        }
        break;
    }
    return field;
}

template <class F>
CubicSurface<F> parse_surface(std::istream& in, const std::string& name) {
    CubicSurface<F> s;
    s.name = name;
    s.certificate = {SmoothnessCertificate::Kind::asserted, "loaded from file"};
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "field:") continue;
        int i = 0, j = 0, k = 0, l = 0;
        std::string colon, value;
        std::istringstream reread(line);
        if (!(reread >> i >> j >> k >> l >> colon >> value) || colon != ":")
            throw parse_error("bad fixture line: '" + line + "'");
        if (i < 0 || j < 0 || k < 0 || l < 0 || i + j + k + l != 3)
            throw parse_error("fixture exponents must be nonnegative and sum to 3: '" + line +
                              "'");
        s.form.set_term(i, j, k, l, FieldOps<F>::parse(value));
        any = true;
    }
    if (!any || s.form.is_zero_form()) throw parse_error("fixture defines the zero form");
    return s;
}

template <class F>
CubicSurface<F> load_surface_file(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open surface file: " + path);
    return parse_surface<F>(in, name);
}

template <class F>
void write_surface_file(std::ostream& out, const CubicSurface<F>& s) {
    out << "# cubic surface " << s.name << "\n";
    out << "field: " << FieldOps<F>::name() << "\n";
    const auto& exps = CubicForm<F>::exponents();
    for (std::size_t m = 0; m < 20; ++m) {
        if (is_zero(s.form.c[m])) continue;
        out << exps[m][0] << " " << exps[m][1] << " " << exps[m][2] << " " << exps[m][3] << " : "
            << FieldOps<F>::str(s.form.c[m]) << "\n";
    }
}

}  // namespace cubiq
