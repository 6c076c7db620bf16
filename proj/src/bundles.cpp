#include "covertex/bundles.hpp"

#include "covertex/series.hpp"

namespace covertex {

long default_series_order(const VertexCoalgebra& V) {
    const DegreeSupport s = V.support();
    return 2 * s.width() + 4;
}

Check check_cojacobi_series(const VertexCoalgebra& V, long order) {
    require(order >= 4, "series window order must be >= 4");
    Check chk{"cojacobi-series", 0, 0, {}};
    const DegreeSupport s = V.support();
    const std::vector<std::string> vars{"x", "y", "z"};
    const auto window = cube_window(3, -order, order);
    const ScalarSeries shift_xz = delta_shift(vars, 1, "x", -1, "z", "y", window);
    const ScalarSeries shift_xy = delta_shift(vars, 1, "x", -1, "y", "z", window);
    const ScalarSeries shift_yx = delta_shift(vars, -1, "y", 1, "x", "z", window);

    const ExpInterval degree_window =
        s.empty() ? ExpInterval::none()
                  : ExpInterval::window(-s.hi - 1, -s.lo - 1);

    for (int b = 0; b < V.dim; ++b) {
        chk.count_case();

        // (nabla(z) (x) Id) nabla(y) e_b: z carries the outer degree.
        Series<Tensor3> inner_l(vars, Tensor3(V.dim));
        inner_l.set_support(0, ExpInterval::window(0, 0));
        inner_l.set_support(1, degree_window);
        inner_l.set_support(2, degree_window);
        // (Id (x) nabla(y)) nabla(x) e_b and its flipped sibling.
        Series<Tensor3> inner_r1(vars, Tensor3(V.dim));
        inner_r1.set_support(0, degree_window);
        inner_r1.set_support(1, degree_window);
        inner_r1.set_support(2, ExpInterval::window(0, 0));
        Series<Tensor3> inner_r2 = inner_r1;

        if (!s.empty()) {
            for (long outer = s.lo; outer <= s.hi; ++outer) {
                const LinMap2& douter = V.family.at(outer);
                for (long inner = s.lo; inner <= s.hi; ++inner) {
                    const Tensor2& mid = V.family.at(inner).column(b);
                    if (mid.zero()) continue;
                    inner_l.add_coeff({0, -inner - 1, -outer - 1},
                                      slot_apply(douter, 1, mid));
                    Tensor3 second = slot_apply(douter, 2, mid);
                    inner_r1.add_coeff({-inner - 1, -outer - 1, 0}, second);
                    inner_r2.add_coeff({-outer - 1, -inner - 1, 0}, transpose12(second));
                }
            }
        }

        Series<Tensor3> lhs = mul(shift_xz, inner_l);
        Series<Tensor3> rhs = mul(shift_xy, inner_r1);
        rhs -= mul(shift_yx, inner_r2);

        SeriesComparison cmp = compare(lhs, rhs);
        if (cmp.vacuous) {
            chk.fail_case("basis=" + std::to_string(b),
                          "jointly trusted region is empty; raise the window order");
        } else if (!cmp.equal) {
            chk.fail_case("basis=" + std::to_string(b), cmp.witness);
        }
    }
    return chk;
}

const char* bundle_name(Bundle b) {
    switch (b) {
        case Bundle::A: return "A";
        case Bundle::B: return "B";
        case Bundle::C: return "C";
        case Bundle::D: return "D";
    }
    contract_fail("unknown bundle");
}

std::vector<Bundle> all_bundles() { return {Bundle::A, Bundle::B, Bundle::C, Bundle::D}; }

CheckSet run_bundle(const VertexCoalgebra& V, Bundle b, int jobs) {
    CheckSet out;
    out.subject = V.name + " [bundle " + bundle_name(b) + "]";
    const ActivityWindow w = effective_window(V);
    switch (b) {
        case Bundle::A:
        case Bundle::B:
            out.checks.push_back(check_left_counit(V));
            out.checks.push_back(check_weak_cocreation(V));
            out.checks.push_back(check_truncation_structural(V));
            out.checks.push_back(check_cb_box(V, w, jobs));
            if (b == Bundle::A) {
                out.checks.push_back(check_cojacobi_series(V, default_series_order(V)));
            }
            break;
        case Bundle::C:
        case Bundle::D: {
            const DStarData d = dstar_data(V);
            out.checks.push_back(check_left_counit(V));
            out.checks.push_back(check_strong_cocreation(V, d));
            out.checks.push_back(check_coskew(V, d));
            out.checks.push_back(check_dstar_left(V, d));
            if (b == Bundle::C) {
                out.checks.push_back(check_cocommutator_plane(V, w, jobs));
            } else {
                out.checks.push_back(check_coassociator_plane(V, w, jobs));
            }
            break;
        }
    }
    return out;
}

}  // namespace covertex
