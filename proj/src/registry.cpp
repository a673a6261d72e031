#include "skewtor/registry.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace skewtor {

using json = nlohmann::ordered_json;

std::string kindName(StructureKind k) {
    switch (k) {
    case StructureKind::G2: return "g2";
    case StructureKind::Contact: return "contact";
    case StructureKind::Hermitian: return "hermitian";
    }
    return "?";
}

G2Structure ModelEntry::g2() const {
    if (kind != StructureKind::G2) throw std::logic_error(name + " carries no G2-structure");
    return G2Structure(model, omega);
}

AlmostContact ModelEntry::contact() const {
    if (kind != StructureKind::Contact) throw std::logic_error(name + " carries no almost contact structure");
    return AlmostContact(model, basisVector(model.dim(), xi), phi);
}

AlmostHermitian ModelEntry::hermitian() const {
    if (kind != StructureKind::Hermitian) throw std::logic_error(name + " carries no almost hermitian structure");
    return AlmostHermitian(model, J);
}

Form ModelEntry::characteristicTorsion() const {
    switch (kind) {
    case StructureKind::G2: return torsionForm(g2());
    case StructureKind::Contact: return contactTorsion(contact());
    case StructureKind::Hermitian: return hermitianTorsion(hermitian());
    }
    throw std::logic_error("unreachable");
}

namespace {

LieModel lie(const std::string& name, int n, std::initializer_list<std::pair<int, const char*>> de) {
    std::vector<Form> d(n, Form(n));
    for (const auto& [i, expr] : de) d[i - 1] = parseForm(n, expr);
    return LieModel(name, d);
}

ModelEntry g2Entry(LieModel m, std::string notes, bool connection = true) {
    ModelEntry e;
    e.name = m.name();
    e.notes = std::move(notes);
    e.kind = StructureKind::G2;
    e.omega = g2Form();
    e.model = std::move(m);
    e.hasConnection = connection;
    return e;
}

ModelEntry contactEntry(LieModel m, int xi, const std::vector<std::pair<int, int>>& pairs, std::string notes,
                        bool connection = true) {
    AlmostContact s = AlmostContact::fromPairs(m, xi - 1, [&] {
        std::vector<std::pair<int, int>> p;
        for (auto [a, b] : pairs) p.emplace_back(a - 1, b - 1);
        return p;
    }());
    ModelEntry e;
    e.name = m.name();
    e.notes = std::move(notes);
    e.kind = StructureKind::Contact;
    e.xi = xi - 1;
    e.phi = s.phi();
    e.model = std::move(m);
    e.hasConnection = connection;
    return e;
}

ModelEntry hermitianEntry(LieModel m, const std::vector<std::pair<int, int>>& pairs, std::string notes,
                          bool connection = true) {
    std::vector<std::pair<int, int>> p;
    for (auto [a, b] : pairs) p.emplace_back(a - 1, b - 1);
    AlmostHermitian s = AlmostHermitian::fromPairs(m, p);
    ModelEntry e;
    e.name = m.name();
    e.notes = std::move(notes);
    e.kind = StructureKind::Hermitian;
    e.J = s.J();
    e.model = std::move(m);
    e.hasConnection = connection;
    return e;
}

std::vector<ModelEntry> buildRegistry() {
    std::vector<ModelEntry> r;
    r.push_back(g2Entry(lie("heis7", 7, {{4, "e16 + e37"}, {5, "e13 - e67"}}),
                        "Heisenberg group H(3) times R; cocalibrated of pure type Lambda^3_27"));
    r.push_back(g2Entry(
        lie("solv7", 7, {{3, "e13 - e24"}, {4, "e23 + e14"}, {5, "-e15 + e26"}, {6, "-e25 - e16"}}),
        "complex solvable group of complex dimension 3 times R; cocalibrated of pure type Lambda^3_27"));
    r.push_back(g2Entry(lie("almab7", 7,
                            {{1, "e27 + e37 + e47"},
                             {2, "-e27 - e37"},
                             {3, "e27 + e57"},
                             {4, "-e17 - e27 - e47"},
                             {5, "-e57 + e67"},
                             {6, "-e47 - e57"}}),
                        "almost abelian R^6 x R; all three torsion components nonzero"));
    r.push_back(g2Entry(LieModel::abelian(7), "flat R^7 with the standard G2-structure"));
    r.back().name = "abelian7";

    const std::vector<std::pair<int, int>> std5{{1, 2}, {3, 4}};
    r.push_back(contactEntry(lie("heis5", 5, {{5, "2*e12 + 2*e34"}}), 5, std5,
                             "five-dimensional Heisenberg group; Sasakian with d eta = 2(e12 + e34)"));
    r.push_back(contactEntry(lie("aff5", 5, {{2, "e12"}, {4, "e34"}, {5, "2*e12 + 2*e34"}}), 5, std5,
                             "Sasakian, non-nilpotent; used for the Tanno deformation"));
    r.push_back(contactEntry(lie("m5n", 5, {{4, "e12"}}), 5, std5,
                             "normal with Killing Reeb field, not Sasakian; T = eta ^ d eta + d^phi F"));
    r.push_back(contactEntry(lie("su2r2", 5, {{1, "e23"}, {2, "-e13"}, {3, "e12"}}), 1, {{2, 4}, {3, 5}},
                             "su(2) + R^2; skew nonzero Nijenhuis tensor with Killing Reeb field"));
    r.push_back(contactEntry(lie("cosymp5", 5, {{2, "e12"}, {4, "e34"}}), 5, std5,
                             "closed fundamental form; N = 0 and T = 0"));
    r.push_back(contactEntry(LieModel::abelian(5), 5, std5, "flat R^5"));
    r.back().name = "abelian5";

    const std::vector<std::pair<int, int>> std6{{1, 2}, {3, 4}, {5, 6}};
    r.push_back(hermitianEntry(
        lie("solv6", 6, {{3, "e13 - e24"}, {4, "e23 + e14"}, {5, "-e15 + e26"}, {6, "-e25 - e16"}}), std6,
        "complex solvable group of complex dimension 3; integrable, holonomy in SU(3)"));
    r.push_back(hermitianEntry(LieModel::abelian(6), std6, "flat R^6"));
    r.back().name = "abelian6";
    for (auto& e : r) e.model = LieModel(e.name, e.model.differentials());
    return r;
}

std::vector<ModelEntry> buildFixtures() {
    std::vector<ModelEntry> r;
    r.push_back(g2Entry(lie("almab7x", 7, {{2, "-e17 - e27"}, {3, "-e47"}}),
                        "synthetic: Gamma has a Lambda^2_14 part, no characteristic connection", false));
    const std::vector<std::pair<int, int>> std5{{1, 2}, {3, 4}};
    r.push_back(contactEntry(lie("nk5", 5, {{1, "e15"}}), 5, std5,
                             "synthetic: Nijenhuis tensor not skew-symmetric", false));
    r.push_back(contactEntry(lie("nokill5", 5, {{1, "e45"}, {2, "-e35"}}), 5, std5,
                             "synthetic: skew Nijenhuis tensor, Reeb field not Killing", false));
    r.push_back(hermitianEntry(lie("kt4", 4, {{3, "e12"}}), {{1, 3}, {2, 4}},
                               "synthetic: almost Kaehler, not Kaehler", false));
    r.push_back(hermitianEntry(lie("herm4", 4, {{2, "e24"}}), {{1, 2}, {3, 4}},
                               "synthetic: Nijenhuis tensor not skew-symmetric, d Omega != 0", false));
    return r;
}

json formJson(const Form& f) {
    json a = json::array();
    for (const auto& [b, c] : f.terms()) {
        json idx = json::array();
        for (int i : bladeIndices(b)) idx.push_back(i + 1);
        a.push_back(json::array({idx, str(c)}));
    }
    return a;
}

json matJson(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Rational rationalOf(const json& v) {
    if (v.is_string()) return parseRational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ModelFileError("coefficient must be a \"p/q\" string or an integer, got " + v.dump());
}

Form formOf(int n, const json& a) {
    if (!a.is_array()) throw ModelFileError("form must be a list of [indices, coefficient] pairs");
    Form f(n);
    for (const auto& term : a) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
            throw ModelFileError("bad form term " + term.dump());
        std::vector<int> idx;
        for (const auto& i : term[0]) {
            int k = i.get<int>();
            if (k < 1 || k > n) throw ModelFileError("index " + std::to_string(k) + " out of range");
            idx.push_back(k - 1);
        }
        if (permutationSign(idx) == 0) throw ModelFileError("repeated index in " + term[0].dump());
        f += Form::eIdx(n, idx, rationalOf(term[1]));
    }
    return f;
}

Mat matOf(int n, const json& a) {
    if (!a.is_array() || static_cast<int>(a.size()) != n) throw ModelFileError("matrix must have dim rows");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!a[i].is_array() || static_cast<int>(a[i].size()) != n)
            throw ModelFileError("matrix row " + std::to_string(i + 1) + " must have dim entries");
        for (int j = 0; j < n; ++j) m(i, j) = rationalOf(a[i][j]);
    }
    return m;
}

} // namespace

const std::vector<ModelEntry>& registryModels() {
    static const std::vector<ModelEntry> r = buildRegistry();
    return r;
}

const std::vector<ModelEntry>& fixtureModels() {
    static const std::vector<ModelEntry> r = buildFixtures();
    return r;
}

std::vector<std::string> modelPathDirs() {
    std::vector<std::string> dirs;
    const char* env = std::getenv("SKEWTOR_MODEL_PATH");
    if (!env) return dirs;
    std::stringstream ss(env);
    std::string d;
    while (std::getline(ss, d, ':'))
        if (!d.empty()) dirs.push_back(d);
    return dirs;
}

std::optional<ModelEntry> findModel(const std::string& name) {
    for (const auto* list : {&registryModels(), &fixtureModels()})
        for (const auto& e : *list)
            if (e.name == name) return e;
    for (const auto& dir : modelPathDirs()) {
        std::filesystem::path p = std::filesystem::path(dir) / (name + ".json");
        if (std::filesystem::exists(p)) return loadModelFile(p.string());
    }
    return std::nullopt;
}

std::string modelToJson(const ModelEntry& e, int indent) {
    const int n = e.model.dim();
    json de = json::array();
    for (int i = 0; i < n; ++i)
        if (!e.model.de(i).isZero()) de.push_back({{"index", i + 1}, {"d", formJson(e.model.de(i))}});
    json st;
    switch (e.kind) {
    case StructureKind::G2: st = {{"g2", {{"omega", formJson(e.omega)}}}}; break;
    case StructureKind::Contact:
        st = {{"contact",
               {{"xi", e.xi + 1}, {"eta", formJson(Form::oneForm(basisVector(n, e.xi)))}, {"phi", matJson(e.phi)}}}};
        break;
    case StructureKind::Hermitian: st = {{"hermitian", {{"J", matJson(e.J)}}}}; break;
    }
    json doc = {{"name", e.name}, {"dim", n}, {"notes", e.notes}, {"coframe_d", de}, {"structure", st}};
    if (indent < 0) return doc.dump();
    // one line per coframe differential, the rest compact
    std::string pad(indent, ' ');
    std::ostringstream os;
    os << "{\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        os << pad << json(it.key()).dump() << ": ";
        if (it.key() == "coframe_d" && !it->empty()) {
            os << "[\n";
            for (std::size_t i = 0; i < it->size(); ++i)
                os << pad << pad << (*it)[i].dump() << (i + 1 < it->size() ? ",\n" : "\n");
            os << pad << "]";
        } else {
            os << it->dump();
        }
        os << (std::next(it) != doc.end() ? ",\n" : "\n");
    }
    os << "}";
    return os.str();
}

ModelEntry modelFromJson(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ModelFileError(std::string("invalid JSON: ") + ex.what());
    }
    try {
        ModelEntry e;
        e.name = doc.at("name").get<std::string>();
        e.notes = doc.value("notes", "");
        const int n = doc.at("dim").get<int>();
        if (n < 1 || n > kMaxDim) throw ModelFileError("dim must be between 1 and " + std::to_string(kMaxDim));
        std::vector<Form> de(n, Form(n));
        for (const auto& item : doc.at("coframe_d")) {
            int i = item.at("index").get<int>();
            if (i < 1 || i > n) throw ModelFileError("coframe index " + std::to_string(i) + " out of range");
            Form d = formOf(n, item.at("d"));
            if (!d.isZero() && d.degree() != 2) throw ModelFileError("d e" + std::to_string(i) + " must be a 2-form");
            de[i - 1] = d;
        }
        try {
            e.model = LieModel(e.name, de);
        } catch (const InvalidModel& ex) {
            throw ModelFileError(std::string("not a Lie algebra: ") + ex.what());
        }
        const json& st = doc.at("structure");
        if (st.size() != 1) throw ModelFileError("structure must name exactly one of g2, contact, hermitian");
        if (st.contains("g2")) {
            e.kind = StructureKind::G2;
            e.omega = formOf(n, st["g2"].at("omega"));
            (void)e.g2();
        } else if (st.contains("contact")) {
            const json& c = st["contact"];
            e.kind = StructureKind::Contact;
            int xi = c.at("xi").get<int>();
            if (xi < 1 || xi > n) throw ModelFileError("xi index out of range");
            e.xi = xi - 1;
            if (c.contains("eta") && formOf(n, c["eta"]) != Form::oneForm(basisVector(n, e.xi)))
                throw ModelFileError("eta must be the coframe element dual to xi");
            e.phi = matOf(n, c.at("phi"));
            (void)e.contact();
        } else if (st.contains("hermitian")) {
            e.kind = StructureKind::Hermitian;
            e.J = matOf(n, st["hermitian"].at("J"));
            (void)e.hermitian();
        } else {
            throw ModelFileError("structure must name exactly one of g2, contact, hermitian");
        }
        try {
            (void)e.characteristicTorsion();
        } catch (const NoSkewConnection&) {
            e.hasConnection = false;
        }
        return e;
    } catch (const json::exception& ex) {
        throw ModelFileError(std::string("malformed model file: ") + ex.what());
    } catch (const InvalidStructure& ex) {
        throw ModelFileError(std::string("structure invariants fail: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw ModelFileError(std::string("invalid structure: ") + ex.what());
    }
}

ModelEntry loadModelFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelFileError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return modelFromJson(ss.str());
}

} // namespace skewtor
