// skewtor: model registry, verification suites and ad hoc computations.
// Exit codes: 0 success, 1 a check failed (or no characteristic connection),
// 2 usage or input error.

#include "skewtor/registry.hpp"
#include "skewtor/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace skewtor;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ModelEntry requireModel(const std::string& name) {
    try {
        if (auto m = findModel(name)) return *m;
    } catch (const ModelFileError& e) {
        throw UsageError("model file for '" + name + "': " + e.what());
    }
    throw UsageError("unknown model '" + name + "' (see `skewtor models list`)");
}

Form requireForm(int dim, const std::string& expr) {
    try {
        return parseForm(dim, expr);
    } catch (const ParseError& e) {
        std::ostringstream os;
        os << e.what() << "\n  " << expr << "\n  "
           << std::string(e.position, ' ') << "^";
        throw UsageError(os.str());
    }
}

std::string formStr(const Form& f) { return f.isZero() ? "0" : f.toString(); }

void printMat(const std::string& label, const Mat& m) {
    std::cout << label << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << "  ";
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << str(m(i, j));
        std::cout << "\n";
    }
}

int modelsList() {
    auto show = [](const ModelEntry& e, const char* tag) {
        std::cout << e.name << "  dim " << e.model.dim() << "  " << kindName(e.kind) << tag << "  " << e.notes << "\n";
    };
    for (const auto& e : registryModels()) show(e, "");
    for (const auto& e : fixtureModels()) show(e, "  [fixture]");
    for (const auto& dir : modelPathDirs()) std::cout << "(model files are also read from " << dir << ")\n";
    return 0;
}

int torsion(const std::string& name) {
    ModelEntry e = requireModel(name);
    if (e.kind == StructureKind::G2) {
        TorsionClass tc = classify(e.g2());
        std::cout << "lambda = " << str(tc.lambda) << "\nbeta = " << formStr(Form::oneForm(tc.beta))
                  << "\nGamma27 = " << formStr(tc.gamma27) << "\nobstruction14 = " << formStr(tc.obstruction14) << "\n";
    }
    try {
        Form t = e.characteristicTorsion();
        std::cout << "T = " << formStr(t) << "\ndT = " << formStr(e.model.d(t)) << "\n";
        return 0;
    } catch (const NoSkewConnection& ex) {
        std::cout << "no characteristic connection: " << ex.what() << "\n";
        return 1;
    }
}

int ricci(const std::string& name) {
    ModelEntry e = requireModel(name);
    Form t;
    try {
        t = e.characteristicTorsion();
    } catch (const NoSkewConnection& ex) {
        std::cout << "no characteristic connection: " << ex.what() << "\n";
        return 1;
    }
    Curvature cn = curvature(e.model, withTorsion(e.model, t));
    Curvature cg = curvature(e.model, leviCivita(e.model));
    std::cout << "T = " << formStr(t) << "\n";
    printMat("Ric (characteristic connection)", cn.ric);
    std::cout << "Scal = " << str(cn.scal) << "\n";
    printMat("T_imn T_jmn", torsionSquare(t));
    printMat("Ric^g", cg.ric);
    std::cout << "Scal^g = " << str(cg.scal) << "\n";
    if (e.kind == StructureKind::G2) {
        Mat viaDT = ricciViaDT(e.g2(), t);
        std::cout << "Ric from dT and nabla T " << (viaDT == cn.ric ? "agrees" : "DISAGREES") << " with curvature\n";
        if (viaDT != cn.ric) return 1;
    }
    return 0;
}

int decompose(const std::string& name, const std::string& expr) {
    ModelEntry e = requireModel(name);
    if (e.kind != StructureKind::G2) throw UsageError("decompose needs a model with a G2-structure");
    Form a = requireForm(e.model.dim(), expr);
    switch (a.isZero() ? 3 : a.degree()) {
    case 2: {
        Split2 s = project2(a);
        std::cout << "part7 = " << formStr(s.part7) << "\npart14 = " << formStr(s.part14) << "\n";
        return 0;
    }
    case 3: {
        Split3 s = project3(a);
        std::cout << "part1 = " << formStr(s.part1) << "\npart7 = " << formStr(s.part7)
                  << "\npart27 = " << formStr(s.part27) << "\n";
        return 0;
    }
    default: throw UsageError("decompose takes a homogeneous 2-form or 3-form");
    }
}

int spinEig(int dim, const std::string& expr) {
    if (dim < 2 || dim > kMaxDim) throw UsageError("dimension must be between 2 and " + std::to_string(kMaxDim));
    Form a = requireForm(dim, expr);
    EigenReport r = eigenvalues(actForm(buildRep(dim), a));
    std::cout << "(";
    bool first = true;
    for (const auto& v : r.multiset()) {
        std::cout << (first ? "" : ",") << str(v);
        first = false;
    }
    std::cout << ")\n";
    if (!r.splits()) std::cout << "remaining factor without Gaussian rational roots: " << str(r.residual) << "\n";
    return 0;
}

int verify(const std::string& suite, bool json) {
    auto r = runSuite(suite);
    if (!r) {
        std::string names;
        for (const auto& n : suiteNames()) names += " " + n;
        throw UsageError("unknown suite '" + suite + "'; available:" + names);
    }
    std::cout << (json ? toJson(*r) + "\n" : toText(*r));
    return r->exitCode();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connections with skew-symmetric torsion on Lie groups: checks and computations"};
    app.require_subcommand(0, 1);
    bool ledger = false;
    app.add_flag("--convention-ledger", ledger, "print the pinned sign and orientation conventions");

    auto* models = app.add_subcommand("models", "list or show the embedded models");
    models->require_subcommand(1);
    auto* list = models->add_subcommand("list", "list models");
    auto* show = models->add_subcommand("show", "print a model as a model file");
    std::string showName;
    show->add_option("name", showName)->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    bool json = false;
    ver->add_option("suite", suite, "exterior, clifford, section2, slformula, g2, equivariant, contact, hermitian, "
                                    "examples or all")
        ->required();
    ver->add_flag("--json", json, "emit the report as JSON");

    std::string modelName, expr;
    auto* tor = app.add_subcommand("torsion", "torsion of the characteristic connection");
    tor->add_option("model", modelName)->required();
    auto* ric = app.add_subcommand("ricci", "Ricci tensors of the characteristic and Levi-Civita connections");
    ric->add_option("model", modelName)->required();
    auto* dec = app.add_subcommand("decompose", "G2-type components of a 2- or 3-form");
    dec->add_option("model", modelName)->required();
    dec->add_option("expr", expr, "e.g. \"e1^e2^e7 + 1/2*e1^e3^e5\"")->required();
    auto* eig = app.add_subcommand("spin-eig", "eigenvalues of a form acting on spinors");
    int dim = 0;
    eig->add_option("dim", dim)->required();
    eig->add_option("expr", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (ledger) {
            std::cout << conventionLedger();
            return 0;
        }
        if (*list) return modelsList();
        if (*show) {
            std::cout << modelToJson(requireModel(showName)) << "\n";
            return 0;
        }
        if (*ver) return verify(suite, json);
        if (*tor) return torsion(modelName);
        if (*ric) return ricci(modelName);
        if (*dec) return decompose(modelName, expr);
        if (*eig) return spinEig(dim, expr);
        std::cout << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "skewtor: " << e.what() << "\n";
        return kUsage;
    }
}
