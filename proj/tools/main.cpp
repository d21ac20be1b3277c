// Command-line front end: run/oracle/generate/bottleneck/validate over the
// plain-text filtration, diagram and point formats.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simpmap/coning.hpp"
#include "simpmap/engine.hpp"
#include "simpmap/io.hpp"
#include "simpmap/oracle.hpp"
#include "simpmap/tda.hpp"

namespace {

// 0 ok, 1 usage or bad input, 2 semantic mismatch, 3 audit failure
constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_audit = 3;

void emit_diagram(const simpmap::persistence_diagram& d, const std::string& out_path) {
    if (out_path.empty()) {
        simpmap::write_diagram(std::cout, d);
    } else {
        simpmap::save_diagram(out_path, d);
    }
}

int cmd_run(const std::string& path, const std::string& out_path, bool keep_zero,
            bool lenient, bool audit) {
    const auto filt = simpmap::load_filtration(path);
    filt.validate();
    simpmap::engine_options opts;
    opts.lenient = lenient;
    const int cap = filt.max_insert_dim() + (filt.has_collapse() ? 1 : 0);
    simpmap::engine eng(cap, opts);
    for (std::size_t i = 0; i < filt.ops.size(); ++i) {
        try {
            eng.apply(filt.ops[i]);
        } catch (const simpmap::error& e) {
            std::cerr << "op " << i << ": " << e.what() << '\n';
            return exit_input;
        }
        if (audit) {
            const auto rep = simpmap::audit_annotations(eng.complex(), eng.annotations());
            if (!rep.ok) {
                std::cerr << "audit failure after op " << i << ": " << rep.detail << '\n';
                return exit_audit;
            }
        }
    }
    auto d = eng.diagram();
    if (!keep_zero) d = simpmap::drop_zero_pairs(d);
    emit_diagram(d, out_path);
    return exit_ok;
}

int cmd_oracle(const std::string& path, const std::string& out_path, bool keep_zero) {
    const auto filt = simpmap::load_filtration(path);
    filt.validate();
    auto d = simpmap::reduce_persistence(filt);
    if (!keep_zero) d = simpmap::drop_zero_pairs(d);
    emit_diagram(d, out_path);
    return exit_ok;
}

int cmd_generate(const std::string& points_path, const std::string& out_path,
                 const std::string& mode, double alpha, double eps, int steps, int max_dim) {
    if (alpha <= 0.0) throw simpmap::invalid_parameter("--alpha must be positive");
    if (eps < 0.0 || eps > 1.0) throw simpmap::invalid_parameter("--eps must lie in [0,1]");
    if (steps < 0) throw simpmap::invalid_parameter("--steps must be nonnegative");
    if (max_dim < 1) throw simpmap::invalid_parameter("--max-dim must be at least 1");

    const auto cloud = simpmap::load_points(points_path);
    if (cloud.points.empty()) throw simpmap::invalid_parameter("point file is empty");

    simpmap::filtration filt;
    if (mode == "exact") {
        filt = simpmap::exact_rips_filtration(cloud, alpha, eps, steps, max_dim);
    } else if (mode == "sparse") {
        filt = simpmap::sparse_rips_filtration(cloud, alpha, eps, steps, max_dim).filt;
    } else if (mode == "gic") {
        filt = simpmap::gic_filtration(cloud, alpha, eps, steps, max_dim).filt;
    } else {
        throw simpmap::invalid_parameter("--mode must be exact, sparse or gic");
    }

    if (out_path.empty()) {
        simpmap::write_filtration(std::cout, filt);
    } else {
        simpmap::save_filtration(out_path, filt);
    }
    return exit_ok;
}

int cmd_bottleneck(const std::string& a_path, const std::string& b_path, bool log_scale_flag,
                   int max_dim) {
    auto da = simpmap::load_diagram(a_path);
    auto db = simpmap::load_diagram(b_path);
    if (max_dim >= 0) {
        da = da.restricted(max_dim);
        db = db.restricted(max_dim);
    }
    if (log_scale_flag) {
        da = simpmap::log_scale(simpmap::drop_zero_pairs(da));
        db = simpmap::log_scale(simpmap::drop_zero_pairs(db));
    }
    const auto per_dim = simpmap::bottleneck_by_dim(da, db);
    bool mismatch = false;
    double overall = 0.0;
    for (const auto& [dim, value] : per_dim) {
        std::cout << "dim " << dim << ' ' << simpmap::format_grade(value) << '\n';
        mismatch = mismatch || std::isinf(value);
        overall = std::max(overall, value);
    }
    std::cout << "max " << simpmap::format_grade(overall) << '\n';
    if (mismatch) {
        std::cerr << "essential pair counts differ\n";
        return exit_mismatch;
    }
    return exit_ok;
}

int cmd_validate(const std::string& path, bool dump) {
    const auto filt = simpmap::load_filtration(path);
    filt.validate();

    simpmap::engine_options opts;
    opts.record_collapse_audits = true;
    const int cap = filt.max_insert_dim() + (filt.has_collapse() ? 1 : 0);
    simpmap::engine eng(cap, opts);

    std::size_t collapses = 0;
    bool betti_ok = true, transfer_ok = true, coning_ok = true;
    std::ostringstream failures;

    for (std::size_t i = 0; i < filt.ops.size(); ++i) {
        const auto& op = filt.ops[i];
        if (op.is_collapse()) {
            ++collapses;
            // coning cross-checks on the complex entering the collapse
            const simpmap::simplicial_complex before = eng.complex();
            try {
                const auto cone = simpmap::cone_complex(before, op.u, op.v);
                simpmap::vertex_map vm{{op.v, op.u}};
                const auto image = simpmap::image_complex(before, vm);
                if (!image.subcomplex_of(cone.khat)) {
                    coning_ok = false;
                    failures << "op " << i << ": collapse image escapes the cone\n";
                }
                const int top = std::max(cone.khat.top_dim(), image.top_dim());
                if (simpmap::betti_numbers(cone.khat, std::max(top, 0)) !=
                    simpmap::betti_numbers(image, std::max(top, 0))) {
                    coning_ok = false;
                    failures << "op " << i << ": cone and image Betti numbers differ\n";
                }
                if (!simpmap::is_contiguous(before, cone.khat, {}, vm)) {
                    coning_ok = false;
                    failures << "op " << i << ": inclusion vs collapse contiguity fails\n";
                }
                if (!simpmap::is_contiguous(cone.khat, cone.khat, vm, {})) {
                    coning_ok = false;
                    failures << "op " << i << ": projection vs identity contiguity fails\n";
                }
            } catch (const simpmap::error& e) {
                coning_ok = false;
                failures << "op " << i << ": coning check error: " << e.what() << '\n';
            }
        }
        try {
            eng.apply(op);
        } catch (const simpmap::error& e) {
            std::cerr << "op " << i << ": " << e.what() << '\n';
            return exit_input;
        }
        const auto rep = simpmap::audit_annotations(eng.complex(), eng.annotations());
        if (!rep.ok) {
            betti_ok = false;
            failures << "op " << i << ": " << rep.detail << '\n';
        }
    }
    for (const auto& audit : eng.collapse_audits()) {
        if (!audit.vanishing_rows_zero) {
            transfer_ok = false;
            failures << "op " << audit.op_index << ": a vanishing row stayed nonzero\n";
        }
        if (!audit.mirror_rows_equal) {
            transfer_ok = false;
            failures << "op " << audit.op_index << ": mirror rows differ\n";
        }
    }

    std::cout << "check betti_element_counts: " << (betti_ok ? "pass" : "FAIL") << " ("
              << filt.ops.size() << " ops)\n";
    std::cout << "check collapse_transfer_invariants: " << (transfer_ok ? "pass" : "FAIL")
              << " (" << collapses << " collapses)\n";
    std::cout << "check coning_cross_checks: " << (coning_ok ? "pass" : "FAIL") << " ("
              << collapses << " collapses)\n";
    if (dump) eng.annotations().dump(std::cout);
    if (!(betti_ok && transfer_ok && coning_ok)) {
        std::cerr << failures.str();
        return exit_audit;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence for filtrations connected by simplicial maps"};
    app.require_subcommand(1);

    std::string filt_path, out_path;
    bool keep_zero = false, lenient = false, audit = false;
    auto* run = app.add_subcommand("run", "compute a persistence diagram");
    run->add_option("filtration", filt_path, "filtration file")->required();
    run->add_option("-o,--output", out_path, "diagram output path (default stdout)");
    run->add_flag("--keep-zero", keep_zero, "keep pairs with equal birth and death");
    run->add_flag("--lenient", lenient, "auto-insert missing faces at the same grade");
    run->add_flag("--audit", audit, "re-validate annotations after every op");

    std::string oracle_path, oracle_out;
    bool oracle_keep_zero = false;
    auto* oracle = app.add_subcommand("oracle", "matrix-reduction diagram (insertions only)");
    oracle->add_option("filtration", oracle_path, "filtration file")->required();
    oracle->add_option("-o,--output", oracle_out, "diagram output path (default stdout)");
    oracle->add_flag("--keep-zero", oracle_keep_zero, "keep pairs with equal birth and death");

    std::string points_path, gen_out, mode;
    double alpha = 0.0, eps = 0.0;
    int steps = 5, gen_max_dim = 2;
    auto* gen = app.add_subcommand("generate", "build a filtration from a point cloud");
    gen->add_option("points", points_path, "point file")->required();
    gen->add_option("--mode", mode, "exact | sparse | gic")->required();
    gen->add_option("--alpha", alpha, "base scale")->required();
    gen->add_option("--eps", eps, "scale growth factor in [0,1]")->required();
    gen->add_option("--steps", steps, "number of scale steps (default 5)");
    gen->add_option("--max-dim", gen_max_dim, "complex dimension cap (default 2)");
    gen->add_option("-o,--output", gen_out, "filtration output path (default stdout)");

    std::string d1_path, d2_path;
    bool log_flag = false;
    int bn_max_dim = -1;
    auto* bn = app.add_subcommand("bottleneck", "per-dimension bottleneck distance");
    bn->add_option("diagram1", d1_path, "first diagram file")->required();
    bn->add_option("diagram2", d2_path, "second diagram file")->required();
    bn->add_flag("--log-scale", log_flag, "compare at log scale");
    bn->add_option("--max-dim", bn_max_dim, "ignore pairs above this dimension");

    std::string val_path;
    bool dump = false;
    auto* val = app.add_subcommand("validate", "replay with full invariant audits");
    val->add_option("filtration", val_path, "filtration file")->required();
    val->add_flag("--dump", dump, "print the annotation state after the run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (run->parsed()) return cmd_run(filt_path, out_path, keep_zero, lenient, audit);
        if (oracle->parsed()) return cmd_oracle(oracle_path, oracle_out, oracle_keep_zero);
        if (gen->parsed())
            return cmd_generate(points_path, gen_out, mode, alpha, eps, steps, gen_max_dim);
        if (bn->parsed()) return cmd_bottleneck(d1_path, d2_path, log_flag, bn_max_dim);
        if (val->parsed()) return cmd_validate(val_path, dump);
    } catch (const simpmap::parse_error& e) {
        std::cerr << e.what() << '\n';
        return exit_input;
    } catch (const simpmap::error& e) {
        std::cerr << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
