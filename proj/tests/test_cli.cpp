#include "fixtures.hpp"

#include "skewtor/registry.hpp"
#include "skewtor/suites.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace skewtor;

TEST_CASE("registry contents") {
    auto m = findModel("heis7");
    REQUIRE(m);
    int closed = 0;
    for (int i = 0; i < 7; ++i) closed += m->model.de(i).isZero();
    CHECK(closed == 5);
    // the embedded copy agrees with the independently typed fixture
    CHECK(m->model.differentials() == fixtures::heis7().differentials());
    CHECK(findModel("solv7")->model.differentials() == fixtures::solv7().differentials());

    auto h5 = findModel("heis5");
    REQUIRE(h5);
    CHECK(h5->model.de(4) == parseForm(5, "2*e12 + 2*e34"));
    CHECK(h5->contact().fundamental() == parseForm(5, "e12 + e34"));

    for (const char* name : {"abelian5", "abelian6", "abelian7"}) {
        auto a = findModel(name);
        REQUIRE(a);
        for (const auto& d : a->model.differentials()) CHECK(d.isZero());
    }
    for (const auto& e : registryModels()) {
        INFO(e.name);
        CHECK(e.hasConnection);
        CHECK_NOTHROW(e.characteristicTorsion());
    }
    for (const auto& e : fixtureModels()) {
        INFO(e.name);
        CHECK_FALSE(e.hasConnection);
        CHECK_THROWS_AS(e.characteristicTorsion(), NoSkewConnection);
    }
    CHECK_FALSE(findModel("nosuch"));
}

TEST_CASE("model files round trip") {
    for (const auto* list : {&registryModels(), &fixtureModels()})
        for (const auto& e : *list) {
            INFO(e.name);
            std::string text = modelToJson(e);
            ModelEntry back = modelFromJson(text);
            CHECK(back.name == e.name);
            CHECK(back.kind == e.kind);
            CHECK(back.hasConnection == e.hasConnection);
            CHECK(back.model.differentials() == e.model.differentials());
            CHECK(modelToJson(back) == text);
            CHECK(modelToJson(back, -1) == modelToJson(e, -1));
        }
}

TEST_CASE("model files are validated") {
    const std::string good = modelToJson(*findModel("heis5"), -1);
    CHECK_NOTHROW(modelFromJson(good));
    CHECK_THROWS_AS(modelFromJson("{not json"), ModelFileError);
    // de1 = e23, de2 = e14: d(de1) = e14 ^ e3 != 0
    const std::string noJacobi = R"({"name":"x","dim":4,"coframe_d":[{"index":1,"d":[[[2,3],"1"]]},
        {"index":2,"d":[[[1,4],"1"]]}],"structure":{"hermitian":{"J":[["0","-1","0","0"],["1","0","0","0"],
        ["0","0","0","-1"],["0","0","1","0"]]}}})";
    CHECK_THROWS_AS(modelFromJson(noJacobi), ModelFileError);
    const std::string badJ = R"({"name":"x","dim":4,"coframe_d":[],"structure":{"hermitian":{"J":[["1","0","0","0"],
        ["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}}})";
    CHECK_THROWS_AS(modelFromJson(badJ), ModelFileError);
    const std::string badEta = R"({"name":"x","dim":3,"coframe_d":[],"structure":{"contact":{"xi":3,
        "eta":[[[1],"1"]],"phi":[["0","-1","0"],["1","0","0"],["0","0","0"]]}}})";
    CHECK_THROWS_AS(modelFromJson(badEta), ModelFileError);
    const std::string floatCoeff = R"({"name":"x","dim":3,"coframe_d":[{"index":3,"d":[[[1,2],0.5]]}],
        "structure":{"contact":{"xi":3,"phi":[["0","-1","0"],["1","0","0"],["0","0","0"]]}}})";
    CHECK_THROWS_AS(modelFromJson(floatCoeff), ModelFileError);
    const std::string notG2 = R"({"name":"x","dim":7,"coframe_d":[],"structure":{"g2":{"omega":[[[1,2,3],"1"]]}}})";
    CHECK_THROWS_AS(modelFromJson(notG2), ModelFileError);
}

TEST_CASE("model path directories") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "skewtor_model_path_test";
    fs::create_directories(dir);
    ModelEntry e = *findModel("su2r2");
    e.name = "copied";
    std::ofstream(dir / "copied.json") << modelToJson(e);
    ::setenv("SKEWTOR_MODEL_PATH", (std::string("/nonexistent:") + dir.string()).c_str(), 1);
    auto m = findModel("copied");
    REQUIRE(m);
    CHECK(m->characteristicTorsion() == parseForm(5, "e123"));
    ::unsetenv("SKEWTOR_MODEL_PATH");
    CHECK_FALSE(findModel("copied"));
    fs::remove_all(dir);
}

TEST_CASE("reports") {
    Report r;
    r.suite = "demo";
    r.checks.push_back(expectEqual("a", "first", "PAPER", "1/2", "1/2"));
    r.checks.push_back(expectEqual("b", "second", "DERIVED", "3", "4"));
    r.checks.push_back(skipped("c", "third", "global"));
    r.checks.push_back(fromResidual("d", "fourth", "PAPER", Residual{"d", false, "R(1,2) = -1/3"}));
    CHECK(r.count(Status::Pass) == 1);
    CHECK(r.count(Status::Fail) == 2);
    CHECK(r.exitCode() == 1);
    CHECK(r.find("d")->value == "R(1,2) = -1/3");
    CHECK(reportFromJson(toJson(r)) == r);
    CHECK(reportFromJson(toJson(r, -1)) == r);
    CHECK(toJson(r).find("0.5") == std::string::npos);
    CHECK_THROWS_AS(reportFromJson("{}"), ReportFormatError);
    CHECK_THROWS_AS(reportFromJson(R"({"suite":"x","checks":[{"id":"a","anchor":"","status":"MAYBE",
        "value":"","expected":"","provenance":""}]})"),
                    ReportFormatError);
    r.checks.erase(r.checks.begin() + 1);
    r.checks.pop_back();
    CHECK(r.exitCode() == 0);
}

TEST_CASE("suites") {
    CHECK_FALSE(runSuite("nosuch"));
    CHECK(suiteNames().size() == 10);
    auto ex = runSuite("examples");
    REQUIRE(ex);
    const Check* c = ex->find("heis7.Ric∇ = diag(-2,0,-2,0,0,-2,-2)");
    REQUIRE(c);
    CHECK(c->status == Status::Pass);
    CHECK(ex->exitCode() == 0);
    // ordering is deterministic although groups run in parallel
    CHECK(runSuite("examples") == ex);
    CHECK(reportFromJson(toJson(*ex)) == *ex);
    CHECK(conventionLedger().find("sigma^T") != std::string::npos);
}
