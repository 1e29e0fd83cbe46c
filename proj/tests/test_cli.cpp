#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cli_app.hpp"
#include "qgroupoid/casimirs.hpp"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = qg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("verify all at n = 3 passes")
    {
        auto r = run({"verify", "all", "--n", "3"});
        CHECK(r.code == 0);
        auto j = Json::parse(r.out);
        CHECK(j["status"] == "pass");
        CHECK(j["reports"].size() >= 8);
    }

    TEST_CASE("quiver DOT for n = 2 has six nodes")
    {
        auto r = run({"quiver", "--n", "2", "--format", "dot"});
        CHECK(r.code == 0);
        size_t count = 0;
        for (size_t p = r.out.find("[label="); p != std::string::npos; p = r.out.find("[label=", p + 1))
            ++count;
        CHECK(count == 6);
    }

    TEST_CASE("numeric spectrum at n = 4")
    {
        auto r = run({"spectrum", "--n", "4", "--numeric", "--seed", "7"});
        CHECK(r.code == 0);
        auto j = Json::parse(r.out);
        CHECK(j["numeric_match"] == true);
        CHECK(j["max_rel_err"].get<double>() <= 1e-9);
        CHECK(j.contains("lambda_symbolic"));
    }

    TEST_CASE("out-of-range n is a usage error naming the bound")
    {
        auto r = run({"verify", "reflection", "--n", "5"});
        CHECK(r.code == qg::cli::kUsage);
        CHECK(r.err.find("[2, 4]") != std::string::npos);
        CHECK(run({"verify", "thMM", "--n", "6"}).code == qg::cli::kUsage);
        CHECK(run({"verify", "casimirs", "--n", "9"}).code == qg::cli::kUsage);
        CHECK(run({"poisson", "--n", "6"}).code == qg::cli::kUsage);
        CHECK(run({"bogus"}).code == qg::cli::kUsage);
    }

    TEST_CASE("a corrupted relation gives a nonzero exit with a witness")
    {
        auto r = run({"verify", "thMM", "--n", "3", "--qsign", "1"});
        CHECK(r.code == qg::cli::kCheckFailed);
        auto j = Json::parse(r.out);
        CHECK(j["status"] == "fail");
        bool witness = false;
        for (const auto &rep : j["reports"])
            for (const auto &rel : rep["relations"])
                witness = witness || rel.contains("witness_entry");
        CHECK(witness);
    }

    TEST_CASE("identical config gives byte-identical output, whatever the worker count")
    {
        setenv("QGROUPOID_WORKERS", "1", 1);
        auto a = run({"poisson", "--n", "3", "--trials", "20"});
        auto b = run({"verify", "all", "--n", "2"});
        setenv("QGROUPOID_WORKERS", "3", 1);
        auto c = run({"poisson", "--n", "3", "--trials", "20"});
        auto d = run({"verify", "all", "--n", "2"});
        unsetenv("QGROUPOID_WORKERS");
        CHECK(a.out == c.out);
        CHECK(b.out == d.out);
        CHECK(a.code == 0);
    }

    TEST_CASE("JSON reports match the module reports")
    {
        auto r = run({"verify", "casimirs", "--n", "4"});
        auto j = Json::parse(r.out);
        CHECK(j["reports"][0] == qg::verify_casimirs_An(4).to_json());
    }

    TEST_CASE("Sp_2m casimirs at m = 2 report the extra central element")
    {
        auto r = run({"verify", "casimirs", "--m", "2"});
        CHECK(r.code == qg::cli::kCheckFailed);
        auto j = Json::parse(r.out);
        CHECK(j["reports"][0]["check"] == "casimirs_Sp2m");
    }

    TEST_CASE("other subcommands")
    {
        CHECK(run({"network", "--n", "3"}).code == 0);
        CHECK(run({"network", "--m", "1"}).code == 0);
        CHECK(run({"amatrix", "--n", "3"}).code == 0);
        CHECK(run({"amatrix", "--n", "3", "--format", "text"}).code == 0);
        CHECK(run({"quiver", "--kind", "sp2m", "--m", "2", "--format", "text"}).code == 0);
        CHECK(run({"spectrum", "--n", "3", "--corollary", "3"}).code == 0);
        CHECK(run({"quiver", "--kind", "sp2m", "--n", "4"}).code == qg::cli::kUsage);
    }
}
