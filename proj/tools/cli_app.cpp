#include "cli_app.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgroupoid/casimirs.hpp"
#include "qgroupoid/groupoid.hpp"
#include "qgroupoid/network.hpp"
#include "qgroupoid/poisson.hpp"
#include "qgroupoid/quiver.hpp"
#include "qgroupoid/spectral.hpp"
#include "qgroupoid/suite.hpp"

namespace qg::cli {

using Json = nlohmann::json;

const std::vector<Bound> &bounds()
{
    static const std::vector<Bound> b = {
        {"quiver --n", 2, 12},      {"quiver --m", 1, 6},         {"network --n", 2, 8},
        {"network --m", 1, 4},      {"amatrix --n", 2, 6},        {"verify thMM --n", 2, 5},
        {"verify groupoid --n", 2, 6}, {"verify reflection --n", 2, 4}, {"verify casimirs --n", 2, 8},
        {"verify casimirs --m", 1, 4}, {"verify all --n", 2, 4},  {"spectrum --n", 2, 6},
        {"spectrum --corollary", 1, 12}, {"spectrum --trials", 1, 1000}, {"poisson --n", 2, 5},
        {"poisson --trials", 1, 10000}, {"poisson --points", 1, 10000},
    };
    return b;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(const std::string &what, int v)
{
    for (const auto &b : bounds())
        if (what == b.what) {
            if (v < b.lo || v > b.hi)
                throw UsageError(what + " must be in [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) +
                                 "], got " + std::to_string(v));
            return;
        }
    throw std::logic_error("no bound registered for " + what);
}

Json reports_json(const std::vector<Report> &rs, bool &pass)
{
    Json a = Json::array();
    for (const auto &r : rs) {
        pass = pass && r.pass();
        a.push_back(r.to_json());
    }
    return a;
}

const char *status(bool ok)
{
    return ok ? "pass" : "fail";
}

std::string quiver_text(const Quiver &q)
{
    std::ostringstream os;
    os << kind_name(q.kind()) << " n=" << q.n() << " vertices=" << q.size() << " arrows=" << q.arrows().size()
       << "\n";
    for (const auto &v : q.vertices())
        os << v.id << " " << v.tag << (v.frozen ? " frozen" : "") << "\n";
    for (const auto &[ab, w2] : q.arrows()) {
        int from = w2 > 0 ? ab.first : ab.second, to = w2 > 0 ? ab.second : ab.first;
        int w = std::abs(w2);
        os << q.vertex(from).tag << " -> " << q.vertex(to).tag << " " << (w % 2 ? std::to_string(w) + "/2" : std::to_string(w / 2))
           << "\n";
    }
    return os.str();
}

std::string matrix_text(const QMatrix &A)
{
    std::ostringstream os;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero())
                os << "a" << i + 1 << "," << j + 1 << " = " << A.at(i, j).str() << "\n";
    return os.str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Quantum groupoid cluster realization: builders, dumps and verification suites", "qgroupoid"};
    app.require_subcommand(1);

    int n = 0, m = 0;
    std::string format = "json", kind = "bn", side = "both", stage = "quantum", which;
    unsigned seed = 1;
    int trials = 0, corollary = 0, points = 50, qsign = kDefaultQsign;
    bool numeric = false;

    auto *quiver = app.add_subcommand("quiver", "build a quiver and export it");
    auto *qn = quiver->add_option("--n", n, "rank (b_n, A_n)");
    auto *qm = quiver->add_option("--m", m, "Sp_2m rank");
    quiver->add_option("--kind", kind, "bn | an | sp2m | sp2m-triangle")
        ->check(CLI::IsMember({"bn", "an", "sp2m", "sp2m-triangle"}));
    quiver->add_option("--format", format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));

    auto *network = app.add_subcommand("network", "build the planar networks and dump them");
    auto *nn = network->add_option("--n", n, "b_n rank");
    auto *nm = network->add_option("--m", m, "Sp_2m rank");
    network->add_option("--side", side, "left | right | both")->check(CLI::IsMember({"left", "right", "both"}));

    auto *amatrix = app.add_subcommand("amatrix", "assemble the A-matrix");
    amatrix->add_option("--n", n, "rank")->required();
    amatrix->add_option("--stage", stage, "bn (before K_l = 1) | quantum (after)")
        ->check(CLI::IsMember({"bn", "quantum"}));
    amatrix->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", which, "thMM | groupoid | reflection | casimirs | all")
        ->required()
        ->check(CLI::IsMember({"thMM", "groupoid", "reflection", "casimirs", "all"}));
    auto *vn = verify->add_option("--n", n, "rank");
    auto *vm = verify->add_option("--m", m, "Sp_2m rank (casimirs)");
    verify->add_option("--seed", seed, "seed for random diagonals");
    verify->add_option("--qsign", qsign, "R-matrix argument: -1 for q^-1, 1 for q")->check(CLI::IsMember({-1, 1}));

    auto *spectrum = app.add_subcommand("spectrum", "eigenvalues of A (A^T)^-1");
    spectrum->add_option("--n", n, "rank")->required();
    spectrum->add_flag("--numeric", numeric, "numeric eigenvalue check at q = 1");
    spectrum->add_option("--seed", seed, "first seed of the numeric check");
    auto *st = spectrum->add_option("--trials", trials, "number of random assignments (default 1)");
    auto *sc = spectrum->add_option("--corollary", corollary, "N for the X^N = cI check");

    auto *poisson = app.add_subcommand("poisson", "semiclassical bracket checks");
    poisson->add_option("--n", n, "rank")->required();
    poisson->add_option("--trials", trials, "random matrices for the anchor comparison (default 100)");
    poisson->add_option("--points", points, "random points for the cluster bracket");
    poisson->add_option("--seed", seed, "seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        Json j;
        bool pass = true;
        if (quiver->parsed()) {
            bool sp = kind == "sp2m" || kind == "sp2m-triangle";
            if (sp) {
                if (!*qm)
                    throw UsageError("quiver --kind " + kind + " needs --m");
                require("quiver --m", m);
            } else {
                if (!*qn)
                    throw UsageError("quiver --kind " + kind + " needs --n");
                require("quiver --n", n);
            }
            Quiver q = kind == "bn"              ? build_bn(n)
                       : kind == "an"            ? amalgamate_to_An(build_bn(n))
                       : kind == "sp2m"          ? build_sp2m(m)
                                                 : build_sp2m_pair(m).triangle;
            if (format == "dot")
                out << export_dot(q);
            else if (format == "text")
                out << quiver_text(q);
            else
                out << quiver_json(q).dump(2) << "\n";
            return kPass;
        }
        if (network->parsed()) {
            if (*nm) {
                require("network --m", m);
                SpNetwork sp = build_network_sp2m(m);
                j = {{"kind", "sp2m"}, {"m", m}, {"network", sp.net.to_json()}};
            } else {
                if (!*nn)
                    throw UsageError("network needs --n or --m");
                require("network --n", n);
                BnNetworks nets = build_networks_bn(n);
                j = {{"kind", "bn"}, {"n", n}};
                if (side != "right")
                    j["left"] = nets.left.to_json();
                if (side != "left")
                    j["right"] = nets.right.to_json();
            }
            out << j.dump(2) << "\n";
            return kPass;
        }
        if (amatrix->parsed()) {
            require("amatrix --n", n);
            BnSetup s = make_bn_setup(n);
            QMatrix A = stage == "bn" ? assemble_A(s.transition) : quantum_A(s);
            if (format == "text") {
                out << matrix_text(A);
                return kPass;
            }
            j = {{"n", n}, {"stage", stage}, {"A", A.to_json()}};
            if (stage == "quantum") {
                Report r = check_canonical(n);
                pass = r.pass();
                j["canonical_form"] = r.to_json();
            }
            out << j.dump(2) << "\n";
            return pass ? kPass : kCheckFailed;
        }
        if (verify->parsed()) {
            std::vector<Report> rs;
            bool need_n = which != "casimirs" || !*vm;
            if (need_n && !*vn)
                throw UsageError("verify " + which + " needs --n");
            if (*vn)
                require("verify " + which + " --n", n);
            if (*vm) {
                if (which != "casimirs")
                    throw UsageError("--m applies to verify casimirs only");
                require("verify casimirs --m", m);
            }
            auto append = [&](std::vector<Report> more) { rs.insert(rs.end(), more.begin(), more.end()); };
            if (which == "thMM" || which == "all")
                append(check_transport(n, qsign));
            if (which == "groupoid" || which == "all")
                append(check_groupoid(n, seed));
            if (which == "reflection" || which == "all")
                append(check_reflection(n, seed, 3, qsign));
            if (which == "casimirs" || which == "all") {
                if (*vn)
                    append(check_casimirs(n));
                if (*vm)
                    rs.push_back(verify_casimirs_sp(m));
            }
            Json reports = reports_json(rs, pass);
            j = {{"command", "verify"}, {"suite", which}, {"reports", reports}, {"status", status(pass)}};
            if (*vn)
                j["n"] = n;
            if (*vm)
                j["m"] = m;
            out << j.dump(2) << "\n";
            return pass ? kPass : kCheckFailed;
        }
        if (spectrum->parsed()) {
            require("spectrum --n", n);
            if (*st)
                require("spectrum --trials", trials);
            if (*sc)
                require("spectrum --corollary", corollary);
            BnSetup s = make_bn_setup(n);
            SpectralData d = spectral_data(s);
            Report sym = verify_spectrum_symbolic(s);
            pass = sym.pass();
            j = d.to_json();
            j["symbolic"] = sym.to_json();
            if (numeric) {
                int count = *st ? trials : 1;
                Json runs = Json::array();
                bool match = true;
                double worst = 0;
                for (int t = 0; t < count; ++t) {
                    auto e = numeric_eigen_check(s, seed + static_cast<unsigned>(t));
                    match = match && e.match;
                    worst = std::max(worst, e.max_rel_err);
                    runs.push_back(e.to_json());
                }
                j["numeric_match"] = match;
                j["max_rel_err"] = worst;
                j["numeric_runs"] = runs;
                pass = pass && match;
            }
            if (*sc) {
                auto c = verify_corollary(s, corollary, seed);
                j["corollary"] = c.to_json();
                pass = pass && c.pass;
            }
            j["status"] = status(pass);
            out << j.dump(2) << "\n";
            return pass ? kPass : kCheckFailed;
        }
        if (poisson->parsed()) {
            require("poisson --n", n);
            int count = trials > 0 ? trials : 100;
            require("poisson --trials", count);
            require("poisson --points", points);
            std::vector<Report> rs{verify_anchor_equivalence(n, count, seed), verify_skew_symmetry(n, 5, seed),
                                   verify_jacobi(n), verify_det_casimirs(n)};
            auto cl = verify_cluster_bracket(make_cluster_setup(n), points, seed);
            rs.push_back(cl.report);
            Json reports = reports_json(rs, pass);
            std::ostringstream c;
            c << cluster_calibration();
            j = {{"command", "poisson"},
                 {"n", n},
                 {"trials", count},
                 {"reports", reports},
                 {"cluster_calibration", c.str()},
                 {"worst_case_deviation", cl.worst_rel_dev},
                 {"status", status(pass)}};
            out << j.dump(2) << "\n";
            return pass ? kPass : kCheckFailed;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace qg::cli
