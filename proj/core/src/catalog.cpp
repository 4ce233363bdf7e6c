#include "liedim/catalog.hpp"

#include <algorithm>

#include "liedim/errors.hpp"
#include "liedim/orbit.hpp"

namespace liedim {

namespace {

GroupDescriptor gl(long long n) { return make_group(GroupFamily::GeneralLinear, n); }
GroupDescriptor sp(long long size) { return make_group(GroupFamily::Symplectic, size); }

GroupDescriptor pgl(long long n) {
    GroupDescriptor g = gl(n);
    g.modifiers.projective_center = true;
    return g;
}

GroupDescriptor pgsp(long long size) {
    GroupDescriptor g = sp(size);
    g.modifiers.similitude = true;
    g.modifiers.projective_center = true;
    return g;
}

// GSp(size)/GL1: similitude group modulo its similitude line.
GroupDescriptor gsp_mod_gl1(long long size) {
    GroupDescriptor g = sp(size);
    g.modifiers.similitude = true;
    g.modifiers.quotient_by_gl1 = true;
    return g;
}

GroupDescriptor gl_mod_gl1(long long n) {
    GroupDescriptor g = gl(n);
    g.modifiers.quotient_by_gl1 = true;
    return g;
}

Partition row(long long n) { return Partition({n}); }

Partition blocks2(long long value_a, long long mult_a, long long value_b, long long mult_b) {
    std::vector<long long> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(mult_a), value_a);
    if (value_b > 0)
        parts.insert(parts.end(), static_cast<std::size_t>(mult_b), value_b);
    return Partition(std::move(parts));
}

FunctionalDim gk_functional(const GroupDescriptor& g, const Partition& p) {
    return FunctionalDim::gk_of_orbit(make_orbit(g, p));
}

FunctionalDim generic_gl(long long n) { return gk_functional(gl(n), row(n)); }

// Mirabolic series on GL_n: orbit (2, 1^{n-2}), radical of the (n-1,1)
// parabolic; value n-1 (0 for GL_1, whose series is a character).
FunctionalDim mirabolic(long long n) {
    if (n == 1)
        return FunctionalDim::eisenstein(0, 0);
    return eisenstein_dim(0, gl(n), LeviComposition{{n - 1, 1}, false});
}

FunctionalDim siegel_series(long long sp_size) {
    return eisenstein_dim(0, sp(sp_size), LeviComposition{{sp_size / 2}, false});
}

long long p(const ParamPoint& point, const std::string& name) {
    return point.at(name);
}

struct EntryBuilder {
    std::vector<CatalogEntry> entries;

    void add(CatalogEntry entry) { entries.push_back(std::move(entry)); }
};

std::vector<CatalogEntry> build_entries() {
    EntryBuilder b;

    b.add({"riemann-theta",
           "Mellin transform of the theta function against |.|^s on GL(1)",
           "Riemann's second proof for zeta",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "riemann-theta";
               d.lhs_groups = {gl(1)};
               d.rhs_functionals = {gk_functional(sp(2), Partition({2})),
                                    FunctionalDim::character()};
               return d;
           },
           true});

    b.add({"hecke",
           "GL(2) cusp form integrated over the diagonal torus against |a|^s",
           "Hecke",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "hecke";
               d.lhs_groups = {gl(1)};
               d.rhs_functionals = {gk_functional(gl(2), row(2)), FunctionalDim::character()};
               return d;
           },
           true});

    b.add({"classical-rs",
           "two GL(2) cusp forms against a mirabolic series on PGL(2)",
           "Rankin, Selberg",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "classical-rs";
               d.lhs_groups = {pgl(2)};
               d.rhs_functionals = {gk_functional(gl(2), row(2)), gk_functional(gl(2), row(2)),
                                    mirabolic(2)};
               return d;
           },
           true});

    b.add({"jpss-equal",
           "GL(n) x GL(n) convolution with a mirabolic series on PGL(n)",
           "Jacquet/Piatetski-Shapiro/Shalika",
           {{"n", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "n") >= 2; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               IntegralDescriptor d;
               d.name = "jpss-equal(n=" + std::to_string(n) + ")";
               d.lhs_groups = {pgl(n)};
               d.rhs_functionals = {generic_gl(n), generic_gl(n), mirabolic(n)};
               return d;
           },
           true});

    b.add({"jpss-adjacent",
           "GL(n) x GL(n-1) convolution over the embedded GL(n-1)",
           "Jacquet/Piatetski-Shapiro/Shalika",
           {{"n", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "n") >= 2; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               IntegralDescriptor d;
               d.name = "jpss-adjacent(n=" + std::to_string(n) + ")";
               d.lhs_groups = {gl(n - 1)};
               d.rhs_functionals = {generic_gl(n), generic_gl(n - 1),
                                    FunctionalDim::character()};
               return d;
           },
           true});

    b.add({"jpss-general",
           "GL(n) x GL(k) convolution with the extra unipotent integration Y_{n,k}",
           "Jacquet/Piatetski-Shapiro/Shalika",
           {{"n", 1, 8}, {"k", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "n") >= 2 && p(pt, "k") <= p(pt, "n") - 1; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               const long long k = p(pt, "k");
               IntegralDescriptor d;
               d.name = "jpss-general(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
               d.lhs_groups = {gl(k)};
               d.lhs_unipotent_dims = {n * (n - 1) / 2 - k * (k + 1) / 2};
               d.rhs_functionals = {generic_gl(n), generic_gl(k), FunctionalDim::character()};
               return d;
           },
           true});

    b.add({"jpss-naive-unbalanced",
           "GL(n) x GL(k), k < n-1, without the Y_{n,k} integration (negative control)",
           "Jacquet/Piatetski-Shapiro/Shalika",
           {{"n", 1, 8}, {"k", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "k") <= p(pt, "n") - 2; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               const long long k = p(pt, "k");
               IntegralDescriptor d;
               d.name = "jpss-naive(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
               d.lhs_groups = {gl(k)};
               d.rhs_functionals = {generic_gl(n), generic_gl(k), FunctionalDim::character()};
               return d;
           },
           false});

    b.add({"whittaker-eisenstein",
           "Whittaker coefficient of a generic Eisenstein series on GL(n)",
           "Langlands-Shahidi coefficients",
           {{"n", 1, 8}},
           nullptr,
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               IntegralDescriptor d;
               d.name = "whittaker-eisenstein(n=" + std::to_string(n) + ")";
               d.lhs_unipotent_dims = {n * (n - 1) / 2};
               d.rhs_functionals = {generic_gl(n)};
               return d;
           },
           true});

    b.add({"asai",
           "GL(n) over a quadratic extension against a mirabolic series; the "
           "representation counts once per base-change factor",
           "Flicker (Asai L-function)",
           {{"n", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "n") >= 2; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               IntegralDescriptor d;
               d.name = "asai(n=" + std::to_string(n) + ")";
               d.lhs_groups = {pgl(n)};
               d.rhs_functionals = {generic_gl(n), generic_gl(n), mirabolic(n)};
               return d;
           },
           true});

    b.add({"bf-even",
           "GL(2k) standard x exterior-square integral over GL(1)\\(GL(k) x GL(k))",
           "Bump/Friedberg",
           {{"k", 1, 8}},
           nullptr,
           [](const ParamPoint& pt) {
               const long long k = p(pt, "k");
               IntegralDescriptor d;
               d.name = "bf-even(k=" + std::to_string(k) + ")";
               d.lhs_groups = {gl(k), gl_mod_gl1(k)};
               d.rhs_functionals = {generic_gl(2 * k), mirabolic(k)};
               return d;
           },
           true});

    b.add({"bf-odd",
           "GL(2k+1) standard x exterior-square integral over GL(1)\\(GL(k+1) x GL(k))",
           "Bump/Friedberg",
           {{"k", 1, 8}},
           nullptr,
           [](const ParamPoint& pt) {
               const long long k = p(pt, "k");
               IntegralDescriptor d;
               d.name = "bf-odd(k=" + std::to_string(k) + ")";
               d.lhs_groups = {gl(k + 1), gl_mod_gl1(k)};
               d.rhs_functionals = {generic_gl(2 * k + 1), mirabolic(k + 1)};
               return d;
           },
           true});

    b.add({"bfg-gsp4",
           "generic GSp(4) form against the two maximal-parabolic series (standard x spin)",
           "Bump/Friedberg/Ginzburg",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "bfg-gsp4";
               d.lhs_groups = {gsp_mod_gl1(4)};
               d.rhs_functionals = {gk_functional(sp(4), row(4)), siegel_series(4),
                                    eisenstein_dim(0, sp(4), LeviComposition{{1}, true})};
               return d;
           },
           true});

    b.add({"bfg-gsp6",
           "generic GSp(6) form over the equal-similitude pairs in GL(2) x GSp(4) "
           "mod GL(1); that group has dimension 13",
           "Bump/Friedberg/Ginzburg",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "bfg-gsp6";
               d.lhs_groups = {gsp_mod_gl1(2), gsp_mod_gl1(4)};
               d.rhs_functionals = {gk_functional(sp(6), row(6)),
                                    eisenstein_dim(0, gl(2), LeviComposition{{1, 1}, false}),
                                    siegel_series(4)};
               return d;
           },
           true});

    b.add({"bfg-gsp8",
           "generic GSp(8) form over the equal-similitude pairs in GL(2) x GSp(6) "
           "mod GL(1); that group has dimension 24",
           "Bump/Friedberg/Ginzburg",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "bfg-gsp8";
               d.lhs_groups = {gsp_mod_gl1(2), gsp_mod_gl1(6)};
               d.rhs_functionals = {gk_functional(sp(8), row(8)),
                                    eisenstein_dim(0, sp(6), LeviComposition{{1, 2}, false})};
               return d;
           },
           true});

    b.add({"pollack-shah",
           "PGL(4) form against the (2,2) and (1,1,2) parabolic series; functional "
           "dimensions 6, 4, 5",
           "Pollack/Shah",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "pollack-shah";
               d.lhs_groups = {pgl(4)};
               d.rhs_functionals = {generic_gl(4),
                                    eisenstein_dim(0, gl(4), LeviComposition{{2, 2}, false}),
                                    eisenstein_dim(0, gl(4), LeviComposition{{1, 1, 2}, false})};
               return d;
           },
           true});

    b.add({"pgsp4-klingen",
           "PGL(4) form against the generic Klingen series on PGSp(4)",
           "Ginzburg's SO(6) x GL(2) integral under low-rank isogeny",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "pgsp4-klingen";
               d.lhs_groups = {pgsp(4)};
               d.rhs_functionals = {generic_gl(4),
                                    eisenstein_dim(gk_dimension(gl(2), row(2)), sp(4),
                                                   LeviComposition{{1}, true})};
               return d;
           },
           true});

    b.add({"pgsp4-siegel-classical",
           "PGL(4) form against the Siegel series on PGSp(4), GK bookkeeping only "
           "(negative control: 10 vs 6+3)",
           "Bump/Friedberg/Ginzburg WO-model integral",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "pgsp4-siegel-classical";
               d.lhs_groups = {pgsp(4)};
               d.rhs_functionals = {generic_gl(4), siegel_series(4)};
               return d;
           },
           false});

    b.add({"pgsp4-siegel-extended",
           "the same integral with the WO-model functional: a 3-dimensional "
           "reductive group and a 4-dimensional unipotent group (10 = 7+3)",
           "Bump/Friedberg/Ginzburg WO-model integral",
           {},
           nullptr,
           [](const ParamPoint&) {
               IntegralDescriptor d;
               d.name = "pgsp4-siegel-extended";
               d.mode = EquationMode::Extended;
               d.lhs_groups = {pgsp(4)};
               d.rhs_functionals = {FunctionalDim::explicit_period(3, 4), siegel_series(4)};
               return d;
           },
           true});

    b.add({"ps-rallis-doubling",
           "doubling integral for Sp(2n) x Sp(2n) against the Siegel series on Sp(4n)",
           "Piatetski-Shapiro/Rallis",
           {{"n", 1, 8}},
           nullptr,
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               IntegralDescriptor d;
               d.name = "ps-rallis-doubling(n=" + std::to_string(n) + ")";
               d.mode = EquationMode::Extended;
               d.lhs_groups = {sp(2 * n), sp(2 * n)};
               d.rhs_functionals = {FunctionalDim::matrix_coefficient(sp(2 * n)),
                                    siegel_series(4 * n)};
               return d;
           },
           true});

    b.add({"cfgk-doubling",
           "generalized doubling for Sp(2n) x GL(k): Siegel series on Sp(4kn) built "
           "from the (k^{2n}) orbit, coefficient along ((2k-1)^{2n} 1^{2n})",
           "Cai/Friedberg/Ginzburg/Kaplan",
           {{"n", 1, 8}, {"k", 1, 8}},
           nullptr,
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               const long long k = p(pt, "k");
               const GroupDescriptor h = sp(4 * k * n);
               IntegralDescriptor d;
               d.name = "cfgk-doubling(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
               d.mode = EquationMode::Extended;
               d.lhs_groups = {sp(2 * n), sp(2 * n)};
               d.lhs_unipotent_dims = {
                   gk_dimension(h, blocks2(2 * k - 1, 2 * n, 1, 2 * n))};
               d.rhs_functionals = {
                   FunctionalDim::matrix_coefficient(sp(2 * n)),
                   FunctionalDim::eisenstein(2 * n * n * k * (k - 1),
                                             unipotent_radical_dim(
                                                 h, LeviComposition{{2 * k * n}, false}))};
               return d;
           },
           true});

    b.add({"theta-sp2n-so2k",
           "classical theta kernel on Sp(4nk) lifting generic Sp(2n) forms towards "
           "SO(2k); the lift's GK dimension is the solved value 2nk-n-n^2",
           "classical theta correspondence",
           {{"n", 1, 8}, {"k", 1, 8}},
           [](const ParamPoint& pt) { return 2 * p(pt, "k") >= p(pt, "n") + 1; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               const long long k = p(pt, "k");
               IntegralDescriptor d;
               d.name = "theta-sp2n-so2k(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
               d.mode = EquationMode::Lifting;
               d.lift_gk = 2 * n * k - n - n * n;
               d.lhs_groups = {sp(2 * n)};
               d.rhs_functionals = {gk_functional(sp(2 * n), row(2 * n)),
                                    gk_functional(sp(4 * n * k),
                                                  blocks2(2, 1, 1, 4 * n * k - 2))};
               return d;
           },
           true});

    b.add({"sec7-lift-sl2",
           "SL(2) x SL(2) kernel on Sp(6n) with coefficient orbit ((2n-1)^2 (n+1)^2) "
           "and kernel orbit ((2n)^2 n^2), even n; both forms generic",
           "residue-of-Eisenstein kernel on Sp(6n)",
           {{"n", 1, 8}},
           [](const ParamPoint& pt) { return p(pt, "n") >= 2 && p(pt, "n") % 2 == 0; },
           [](const ParamPoint& pt) {
               const long long n = p(pt, "n");
               const GroupDescriptor h = sp(6 * n);
               IntegralDescriptor d;
               d.name = "sec7-lift-sl2(n=" + std::to_string(n) + ")";
               d.mode = EquationMode::Lifting;
               d.lift_gk = 1;
               d.lhs_groups = {sp(2)};
               d.lhs_unipotent_dims = {
                   gk_dimension(h, blocks2(2 * n - 1, 2, n + 1, 2))};
               d.rhs_functionals = {gk_functional(sp(2), Partition({2})),
                                    gk_functional(h, blocks2(2 * n, 2, n, 2))};
               return d;
           },
           true});

    return b.entries;
}

void iterate_points(const CatalogEntry& entry, std::optional<RangeOverride> range,
                    const std::function<void(const ParamPoint&)>& visit) {
    if (entry.params.empty()) {
        ParamPoint point;
        if (!entry.admissible || entry.admissible(point))
            visit(point);
        return;
    }
    std::vector<long long> values(entry.params.size());
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == entry.params.size()) {
            ParamPoint point;
            for (std::size_t i = 0; i < entry.params.size(); ++i)
                point[entry.params[i].name] = values[i];
            if (!entry.admissible || entry.admissible(point))
                visit(point);
            return;
        }
        const long long lo = range ? range->lo : entry.params[idx].lo;
        const long long hi = range ? range->hi : entry.params[idx].hi;
        for (long long v = lo; v <= hi; ++v) {
            values[idx] = v;
            rec(idx + 1);
        }
    };
    rec(0);
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::vector<CatalogRun> run_catalog(const std::string& id_pattern,
                                    std::optional<RangeOverride> range) {
    if (range && (range->lo < 1 || range->hi < range->lo))
        throw domain_error("catalog range must satisfy 1 <= lo <= hi");

    std::vector<CatalogRun> runs;
    bool matched = false;
    for (const CatalogEntry& entry : catalog_entries()) {
        if (!id_pattern.empty() && entry.id.find(id_pattern) == std::string::npos)
            continue;
        matched = true;
        iterate_points(entry, range, [&](const ParamPoint& point) {
            CatalogRun run;
            run.id = entry.id;
            run.params = point;
            run.report = check_equation(entry.build(point));
            run.expected_balanced = entry.expected_balanced;
            run.as_expected = run.report.balanced == entry.expected_balanced;
            runs.push_back(std::move(run));
        });
    }
    if (!matched)
        throw domain_error("no catalog entry matches '" + id_pattern + "'");
    return runs;
}

std::vector<std::tuple<std::string, std::string, std::string>> list_entries() {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const CatalogEntry& entry : catalog_entries())
        out.emplace_back(entry.id, entry.description, entry.reference);
    return out;
}

} // namespace liedim
