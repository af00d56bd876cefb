#include "valconv/verify.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

// runs the full check suite with default options and prints one line per
// acceptance criterion
int main() {
    std::vector<valconv::CheckResult> checks = valconv::run_suite("all", valconv::VerifyOptions{});
    std::map<int, std::vector<const valconv::CheckResult*>> grouped;
    for (const auto& c : checks)
        grouped[c.criterion].push_back(&c);

    bool all_ok = true;
    for (int criterion = 1; criterion <= 11; ++criterion) {
        auto it = grouped.find(criterion);
        if (it == grouped.end()) {
            std::printf("criterion %2d FAIL  no check ran\n", criterion);
            all_ok = false;
            continue;
        }
        bool ok = true;
        double seconds = 0.0;
        const valconv::CheckResult* worst = it->second.front();
        double worst_ratio = -1.0;
        std::string names;
        for (const valconv::CheckResult* c : it->second) {
            ok = ok && c->pass;
            seconds += c->seconds;
            double ratio = c->limit > 0.0 ? c->measured / c->limit : c->measured;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst = c;
            }
            if (!names.empty())
                names += ", ";
            names += c->name;
        }
        all_ok = all_ok && ok;
        std::printf("criterion %2d %s  %-55s measured %10.3e  limit %10.3e  %5.2f s\n", criterion,
                    ok ? "PASS" : "FAIL", names.c_str(), worst->measured, worst->limit, seconds);
    }
    std::printf("%s\n", all_ok ? "ACCEPTED: all 11 criteria hold"
                               : "REJECTED: at least one criterion failed");
    return all_ok ? 0 : 1;
}
