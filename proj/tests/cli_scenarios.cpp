// End-to-end runs of the command-line tool: exit codes, output markers, and
// file round-trips, exercised through a real shell.

#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

#ifndef DEMKIT_CLI_PATH
#define DEMKIT_CLI_PATH "./demkit"
#endif

struct Res {
    int code = -1;
    std::string out;
};

Res run(const std::string& args) {
    std::string cmd = std::string(DEMKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {};
    Res r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
    return r;
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int failures = 0;

void check(bool ok, const std::string& name, const Res* r = nullptr) {
    if (ok) {
        std::cout << "[ok]   " << name << "\n";
    } else {
        ++failures;
        std::cout << "[FAIL] " << name << "\n";
        if (r) std::cout << "       exit " << r->code << ", output:\n" << r->out << "\n";
    }
}

}  // namespace

int main() {
    std::string dir = "/tmp/demkit_cli_" + std::to_string(getpid());
    mkdir(dir.c_str(), 0755);

    {
        auto r = run("crystal --type A2 --weight 1,1");
        check(r.code == 0 && has(r.out, "8 elements") && has(r.out, "hw (1,1)"),
              "crystal build reports size and highest weight", &r);
    }
    {
        auto r = run("crystal --type A1 --weight 3 --validate");
        check(r.code == 0 && has(r.out, "valid") && has(r.out, "4 elements"),
              "crystal --validate passes on a clean build", &r);
    }
    {
        std::string a = dir + "/a.json", b = dir + "/b.json";
        auto r1 = run("crystal --type A1 --weight 1 --out " + a);
        auto r2 = run("crystal --import " + a + " --validate --out " + b);
        std::string golden =
            R"({"cartan":"A1","edges":[{"from":0,"i":1,"to":1}],)"
            R"("elements":[{"id":0,"wt":[1]},{"id":1,"wt":[-1]}],)"
            R"("provenance":"tableaux"})";
        check(r1.code == 0 && r2.code == 0 && has(r2.out, "valid") &&
                  slurp(a) == golden && slurp(a) == slurp(b),
              "crystal JSON round-trips byte-identically", &r2);
    }
    {
        std::string c = dir + "/c.json";
        std::ofstream(c) << R"({"cartan":"A1","edges":[{"from":0,"i":1,"to":1}],)"
                            R"("elements":[{"id":0,"wt":[1]},{"id":1,"wt":[1]}],)"
                            R"("provenance":"import"})";
        auto r = run("crystal --import " + c + " --validate");
        check(r.code == 2 && has(r.out, "validation failed"),
              "tampered import fails validation with exit 2", &r);
    }
    {
        auto r = run("crystal --import " + dir + "/missing.json");
        check(r.code == 2 && has(r.out, "error"), "missing import file exits 2", &r);
    }
    {
        auto r = run("demazure --type A2 --weight 1,1 --w s1*s2");
        check(r.code == 0 && has(r.out, "B_{s1*s2}(1,1): 5 of 8 elements") &&
                  has(r.out, "char = "),
              "demazure reports the subset size and character", &r);
    }
    {
        std::string d = dir + "/sub.dot";
        auto r = run("demazure --type A2 --weight 1,1 --w s1 --out " + d + " --format dot");
        auto body = slurp(d);
        check(r.code == 0 && body.rfind("digraph", 0) == 0 && has(body, "filled"),
              "demazure DOT export marks the members", &r);
    }
    {
        auto r = run("analyze --type A2 --lambda 0,1 --w s2 --mu 1,0 --u s1");
        check(r.code == 1 && has(r.out, "verdict: all false") &&
                  has(r.out, "outside the subset"),
              "analyze flags the mixed-weight counterexample with exit 1", &r);
    }
    {
        auto r = run("analyze --type A2 --lambda 1,1 --w s1*s2 --mu 1,1 --u s1*s2");
        check(r.code == 1 && has(r.out, "broken:       2 of") &&
                  has(r.out, "verdict: all false"),
              "analyze counts both broken hinges on the adjoint square", &r);
    }
    {
        auto r = run("analyze --type A2 --lambda 1,1 --w s1 --mu 1,1 --u w0");
        check(r.code == 0 && has(r.out, "verdict: all true") && has(r.out, "B_{s1}(2,2)"),
              "analyze reports the decomposition labels on a positive case", &r);
    }
    {
        auto r = run("tensor --type A2 --lambda 1,1 --w s1*s2 --mu 1,1 --u s1*s2");
        check(r.code == 0 && has(r.out, "25 members in a 64-element ambient"),
              "tensor reports member and ambient counts", &r);
    }
    {
        auto r = run("tensor --type A2 --lambda 1,1 --w id --mu 1,1 --u id --budget 10");
        check(r.code == 2 && has(r.out, "budget"), "tensor respects --budget", &r);
    }
    {
        setenv("DEMKIT_BUDGET", "10", 1);
        auto r = run("tensor --type A2 --lambda 1,1 --w id --mu 1,1 --u id");
        unsetenv("DEMKIT_BUDGET");
        check(r.code == 2 && has(r.out, "budget"), "tensor respects DEMKIT_BUDGET", &r);
    }
    {
        setenv("DEMKIT_BUDGET", "abc", 1);
        auto r = run("crystal --type A1 --weight 1");
        unsetenv("DEMKIT_BUDGET");
        check(r.code == 2 && has(r.out, "not an integer"),
              "garbage DEMKIT_BUDGET is rejected", &r);
    }
    {
        auto r = run("sweep --type A1 --max-coeff-sum 2 --include-zero");
        check(r.code == 0 && has(r.out, "lam\tmu\tw\tu") &&
                  has(r.out, "36 instances, 0 disagreements"),
              "rank-1 sweep prints a TSV and a clean summary", &r);
    }
    {
        std::string t = dir + "/sweep.tsv";
        auto r = run("sweep --type A2 --max-coeff-sum 1 --jobs 2 --out " + t);
        auto body = slurp(t);
        check(r.code == 0 && has(r.out, "144 instances, 0 disagreements") &&
                  has(body, "lam\tmu\tw\tu"),
              "rank-2 sweep writes the TSV file", &r);
    }
    {
        auto r = run("sweep --type A4 --max-coeff-sum 1");
        check(r.code == 2 && has(r.out, "--budget"),
              "sweeps above rank 3 demand an explicit budget", &r);
    }
    {
        auto r = run("char --type A2 --weight 1,1 --w s1*s2 --all-words");
        check(r.code == 0 && has(r.out, "char B_{s1*s2}(1,1) = ") &&
                  has(r.out, "operator character matches (all reduced words)"),
              "char cross-checks the operator character", &r);
    }
    {
        auto r = run("experiment");
        check(r.code == 0 && has(r.out, "before: 2 broken hinges, not extremal") &&
                  has(r.out, "after:  extremal") &&
                  has(r.out, "direct sum of Demazure crystals"),
              "experiment removes both edges and flips the verdict", &r);
    }
    {
        auto r = run("experiment --skip-removal");
        check(r.code == 0 && has(r.out, "before:") && !has(r.out, "after:"),
              "experiment --skip-removal only reports the initial state", &r);
    }
    {
        auto r = run("experiment --remove-count 1");
        check(r.code == 1 && has(r.out, "after:") && has(r.out, "not extremal"),
              "removing one edge of two is reported as insufficient", &r);
    }
    {
        auto r = run("bogus");
        check(r.code == 2, "unknown subcommand exits 2", &r);
    }
    {
        auto r = run("");
        check(r.code == 2, "missing subcommand exits 2", &r);
    }
    {
        auto r = run("analyze --type A2 --lambda 1,1 --w s1");
        check(r.code == 2, "missing required options exit 2", &r);
    }
    {
        auto r = run("crystal --type A2 --weight x,y");
        check(r.code == 2 && has(r.out, "error"), "malformed weights exit 2", &r);
    }
    {
        auto r = run("demazure --type A2 --weight 1,1 --w s9");
        check(r.code == 2 && has(r.out, "out of range"), "bad generator index exits 2", &r);
    }
    {
        auto r = run("crystal --type A2 --weight 1,1 --format yaml");
        check(r.code == 2, "unknown output format exits 2", &r);
    }
    {
        auto r = run("crystal --type Q3 --weight 1,1");
        check(r.code == 2 && has(r.out, "error"), "unknown Cartan type exits 2", &r);
    }
    {
        auto r = run("--help");
        check(r.code == 0 && has(r.out, "crystal") && has(r.out, "analyze"),
              "--help lists the subcommands and exits 0", &r);
    }

    std::cout << (failures == 0 ? "all scenarios passed\n"
                                : std::to_string(failures) + " scenario(s) failed\n");
    return failures == 0 ? 0 : 1;
}
