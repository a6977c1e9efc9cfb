#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qphase4/clifford.hpp"
#include "qphase4/errors.hpp"
#include "qphase4/io.hpp"
#include "qphase4/phasespace.hpp"
#include "qphase4/render.hpp"
#include "qphase4/symplectic.hpp"
#include "qphase4/verify.hpp"
#include "qphase4/wigner.hpp"

using namespace qphase4;

namespace {

enum ExitCode { kPass = 0, kVerification = 1, kParse = 2, kDomain = 3, kInvalidState = 4 };

struct Options {
    bool json = false;
    bool unicode = false;
    std::string matrix;
    std::string state = "up,right";
    std::string frame = "0,0,0,0,0";
    std::vector<std::string> ops;
    std::string scope = "all";

    TextStyle style() const { return unicode ? TextStyle::kUnicode : TextStyle::kAscii; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_tables(const Options& opt) {
    if (opt.json) {
        json add = json::array(), mul = json::array(), grid = json::array();
        for (Gf4 a : kGf4Elements) {
            json ra = json::array(), rm = json::array();
            for (Gf4 b : kGf4Elements) {
                ra.push_back(a + b);
                rm.push_back(a * b);
            }
            add.push_back(ra);
            mul.push_back(rm);
        }
        for (int r = 3; r >= 0; --r) {
            json row = json::array();
            for (Gf4 q : kGf4Elements) row.push_back(displacement_name({q, kGf4Elements[r]}, TextStyle::kAscii));
            grid.push_back(row);
        }
        emit({{"order", json::array({"0", "1", "w", "W"})}, {"add", add}, {"mul", mul}, {"displacements", grid}});
        return kPass;
    }
    std::cout << render_field_tables(opt.style()) << "\n" << render_displacement_grid(opt.style());
    return kPass;
}

int cmd_decompose(const Options& opt) {
    const SympMat l = parse_symplectic(opt.matrix);
    const Decomposition d = decompose(l);
    if (opt.json) {
        emit({{"matrix", l}, {"decomposition", d}});
    } else {
        std::cout << to_string(d) << "\n";
    }
    return kPass;
}

int cmd_unitary(const Options& opt) {
    const SympMat l = parse_symplectic(opt.matrix);
    const ExactOperator& u = unitary_for(l);
    if (opt.json) {
        emit({{"matrix", l}, {"decomposition", decompose(l)}, {"unitary", u}});
    } else {
        std::cout << "U_L, L = " << to_string(l) << " = " << to_string(decompose(l)) << "\n" << render_matrix(u);
    }
    return kPass;
}

int cmd_shift(const Options& opt) {
    const SympMat l = parse_symplectic(opt.matrix);
    const Index f = shift_vector(l);
    if (opt.json) {
        emit({{"matrix", l}, {"shift", f}});
    } else {
        std::cout << to_string(f, opt.style()) << "\n";
    }
    return kPass;
}

int cmd_indexop(const Options& opt) {
    const SympMat l = parse_symplectic(opt.matrix);
    const IndexOperator s = index_operator(l);
    std::vector<int> striations;
    for (int n = 0; n < 5; ++n) striations.push_back(s.image_of(n));
    if (opt.json) {
        emit({{"matrix", l}, {"index_operator", s}, {"striation_map", striations}});
    } else {
        std::cout << render_index_operator(s, opt.style()) << "striations n -> m:";
        for (int n = 0; n < 5; ++n) std::cout << " " << n << "->" << striations[n];
        std::cout << "\n";
    }
    return kPass;
}

int cmd_wigner(const Options& opt) {
    const DensityState rho = parse_state(opt.state);
    const WignerTable table = wigner_table(rho, parse_index(opt.frame));
    if (opt.json) {
        emit({{"state", rho.matrix()}, {"table", table}});
    } else {
        std::cout << render_wigner(table, opt.style());
    }
    return kPass;
}

int cmd_apply(const Options& opt) {
    DensityState rho = parse_state(opt.state);
    Index f = parse_index(opt.frame);
    std::vector<Operation> ops;
    for (const std::string& text : opt.ops) ops.push_back(parse_operation(text));

    json steps = json::array();
    auto record = [&](const std::string& label, const json& op, const WignerTable& table) {
        if (opt.json) {
            steps.push_back({{"op", op}, {"state", rho.matrix()}, {"frame", f}, {"table", table}});
        } else {
            std::cout << label << "\n" << render_state(rho) << render_wigner(table, opt.style()) << "\n";
        }
    };
    record("initial", nullptr, wigner_table(rho, f));

    int step = 0;
    for (const Operation& op : ops) {
        ++step;
        TransportResult r = std::holds_alternative<SympMat>(op) ? transport(rho, f, std::get<SympMat>(op))
                                                                : displace(rho, f, std::get<Gf4Vec2>(op));
        rho = r.state;
        f = r.frame;
        json op_json;
        if (const auto* l = std::get_if<SympMat>(&op)) {
            op_json = {{"L", *l}, {"decomposition", decompose(*l)}};
        } else {
            op_json = {{"D", std::get<Gf4Vec2>(op)}};
        }
        record("step " + std::to_string(step) + ": " + to_string(op), op_json, r.table);
    }
    if (opt.json) emit({{"steps", steps}, {"final_frame", f}});
    return kPass;
}

int cmd_census(const Options& opt) {
    const CensusReport report = census();
    if (opt.json) {
        json classes = json::array();
        for (const auto& [e, cls] : report.classes) {
            classes.push_back({{"E", e},
                               {"members", cls.members},
                               {"equivalence_classes", cls.equivalence_classes},
                               {"orbit_sizes", cls.orbit_sizes}});
        }
        emit({{"total", report.total}, {"similarity_classes", report.classes.size()}, {"classes", classes}});
        return kPass;
    }
    std::cout << "definitions: " << report.total << "\n";
    for (const auto& [e, cls] : report.classes) {
        std::cout << "E=" << to_string(e, opt.style()) << ": " << cls.members << " definitions, "
                  << cls.equivalence_classes << " equivalence classes\n";
    }
    std::cout << "similarity classes: " << report.classes.size()
              << "; E=0 equivalence classes: " << report.classes.at(Gf4::zero()).equivalence_classes << "\n";
    return kPass;
}

int cmd_verify(const Options& opt) {
    const auto results = run_verification(opt.scope);
    if (opt.json) {
        json suites = json::array();
        long total = 0;
        for (const auto& r : results) {
            suites.push_back({{"name", r.name}, {"checks", r.checks}, {"summary", r.lines}});
            total += r.checks;
        }
        emit({{"passed", true}, {"checks", total}, {"suites", suites}});
        return kPass;
    }
    long total = 0;
    for (const auto& r : results) {
        std::cout << r.name << ": pass (" << r.checks << " checks)\n";
        for (const auto& line : r.lines) std::cout << "  " << line << "\n";
        total += r.checks;
    }
    std::cout << "all " << results.size() << " suites passed, " << total << " checks\n";
    return kPass;
}

int cmd_cnot(const Options& opt) {
    const CnotReport r = cnot_counterexample();
    if (opt.json) {
        json map = json::array();
        for (Gf4Vec2 b : kAllPoints) {
            map.push_back({{"from", b}, {"to", r.image[point_ordinal(b)]}, {"sign", r.sign[point_ordinal(b)]}});
        }
        emit({{"permutation", map},
              {"fixes_origin", r.fixes_origin},
              {"f2_additive", r.additive},
              {"matching_symplectic", r.matching_symplectic}});
        return kPass;
    }
    std::cout << "CNOT D_b CNOT^+ = +/- D_pi(b):\n";
    for (Gf4Vec2 b : kAllPoints) {
        const Gf4Vec2 to = r.image[point_ordinal(b)];
        std::cout << "  " << to_string(b, opt.style()) << " -> " << to_string(to, opt.style()) << "  "
                  << (r.sign[point_ordinal(b)] > 0 ? "+" : "-") << displacement_name(to, opt.style()) << "\n";
    }
    std::cout << "fixes origin: " << (r.fixes_origin ? "yes" : "no")
              << "; additive over F2: " << (r.additive ? "yes" : "no")
              << "; symplectic matrices inducing this map: " << r.matching_symplectic << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-qubit discrete phase space over GF(4)", "qphase4"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable JSON output");
    app.add_flag("--unicode", opt.unicode, "Unicode symbols in text output");

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };
    auto with_matrix = [&](CLI::App* sub) {
        sub->add_option("matrix", opt.matrix, "Symplectic matrix [[a,b],[c,d]] (entries 0,1,w,W) or I, R, H0, H1, Hw, HW")->required();
        return sub;
    };
    auto* tables = add("tables", "Field tables and the displacement-operator grid");
    auto* decompose_cmd = with_matrix(add("decompose", "Write L as R^r H_x R^s"));
    auto* unitary = with_matrix(add("unitary", "The exact unitary U_L"));
    auto* shift = with_matrix(add("shift", "The shift vector f_L"));
    auto* indexop = with_matrix(add("indexop", "The index operator S_L"));
    auto* wigner = add("wigner", "Wigner table of a state in frame f");
    auto* apply = add("apply", "Apply operations, tracking state, frame and table");
    auto* census_cmd = add("census", "Classify all 1024 Wigner definitions");
    auto* verify = add("verify", "Run the exhaustive verification suites");
    auto* cnot_cmd = add("cnot", "The CNOT label map and why it is not symplectic");

    for (auto* sub : {wigner, apply}) {
        sub->add_option("--state", opt.state, "mixed | up,right | vec:a,b,c,d | @file.json")->capture_default_str();
        sub->add_option("--frame", opt.frame, "Frame f as f0,f1,f2,f3,f4")->capture_default_str();
    }
    // Operations are taken verbatim from the leftovers; a vector option would
    // split bracketed matrices on commas.
    app.allow_extras();
    apply->allow_extras();
    apply->footer("Operations: [[a,b],[c,d]], I, R, H0, H1, Hw, HW or D(q,p), applied left to right");
    verify->add_option("scope", opt.scope, "all or one of the suite names")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        std::vector<std::string> extras = app.remaining(true);
        if (*apply) {
            for (const std::string& arg : extras) {
                if (arg.rfind("--", 0) == 0) throw ParseError("unknown option '" + arg + "'");
            }
            opt.ops = std::move(extras);
            return cmd_apply(opt);
        }
        if (!extras.empty()) throw ParseError("unexpected argument '" + extras.front() + "'");
        if (*tables) return cmd_tables(opt);
        if (*decompose_cmd) return cmd_decompose(opt);
        if (*unitary) return cmd_unitary(opt);
        if (*shift) return cmd_shift(opt);
        if (*indexop) return cmd_indexop(opt);
        if (*wigner) return cmd_wigner(opt);
        if (*census_cmd) return cmd_census(opt);
        if (*verify) return cmd_verify(opt);
        if (*cnot_cmd) return cmd_cnot(opt);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const InvalidState& e) {
        std::cerr << "invalid state: " << e.what() << "\n";
        return kInvalidState;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerification;
    }
    return kPass;
}
