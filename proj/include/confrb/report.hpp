#ifndef CONFRB_REPORT_HPP
#define CONFRB_REPORT_HPP

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "confrb/io.hpp"

namespace confrb {

/// Machine-readable outcome of a CLI command. status is "pass" exactly when
/// the defect list is empty; "info" commands carry no pass/fail semantics.
struct Report {
    struct Defect {
        std::string location;
        std::string text;
        Json poly; // canonical encoding when the defect is a polynomial
    };

    std::string command;
    std::string status = "pass"; // pass | fail | info
    std::vector<Defect> defects;
    double ms = 0;
    Json extra = Json::object();

    void add_defect(const std::string& location, const GaussPoly& poly) {
        defects.push_back({location, poly.str(), poly_to_json(poly)});
        status = "fail";
    }

    void add_defect(const std::string& location, const std::string& text,
                    Json poly = Json()) {
        defects.push_back({location, text, std::move(poly)});
        status = "fail";
    }

    void add_residuals(const RBWitness& wit) {
        for (auto& [a, b, v] : wit.residuals)
            for (size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    add_defect("(" + a + "," + b + ")[" + std::to_string(k) + "]", v[k]);
    }

    void add_axiom_defects(const AxiomReport& rep) {
        for (auto& [loc, v] : rep.anti)
            for (size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    add_defect("anticommutativity(" + loc + ")[" + std::to_string(k) + "]",
                               v[k]);
        for (auto& [loc, v] : rep.jacobi)
            for (size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    add_defect("jacobi(" + loc + ")[" + std::to_string(k) + "]", v[k]);
    }

    Json to_json() const {
        Json jdefects = Json::array();
        for (auto& d : defects)
            jdefects.push_back(Json{{"location", d.location},
                                    {"poly", d.poly},
                                    {"text", d.text}});
        return Json{{"command", command}, {"status", status},
                    {"defects", jdefects}, {"timings", Json{{"ms", ms}}},
                    {"extra", extra}};
    }

    std::string to_text() const {
        std::string out = command + ": " + status;
        char buf[64];
        std::snprintf(buf, sizeof(buf), " (%.1f ms)", ms);
        out += buf;
        out += "\n";
        for (auto& d : defects) out += "  defect " + d.location + ": " + d.text + "\n";
        if (!extra.empty()) out += extra.dump(2) + "\n";
        return out;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace confrb

#endif
