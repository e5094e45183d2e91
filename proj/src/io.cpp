#include "fvw/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fvw {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json complex_array(const CVec& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i)
        arr.push_back({v[i].real(), v[i].imag()});
    return arr;
}

CVec parse_complex_array(const json& arr) {
    CVec v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i)
        v[i] = cd(arr[i][0].get<double>(), arr[i][1].get<double>());
    return v;
}

} // namespace

std::string state_to_json(const FVState& s) {
    json j;
    j["format_version"] = 1;
    j["grid"] = {{"n", s.grid.n},
                 {"p_max", s.grid.p_max},
                 {"hbar", s.grid.hbar},
                 {"mass", s.grid.mass},
                 {"c", s.grid.c}};
    j["representation"] = (s.rep == Rep::FV) ? "FV" : "usual";
    j["psi_plus"] = complex_array(s.psi_plus);
    j["psi_minus"] = complex_array(s.psi_minus);
    return j.dump(1);
}

FVState state_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("state file: unsupported format_version");
    const auto& jg = j.at("grid");
    PhaseSpaceGrid g = make_grid(jg.at("n").get<int>(),
                                 jg.at("p_max").get<double>(),
                                 jg.at("hbar").get<double>(),
                                 jg.at("mass").get<double>(),
                                 jg.at("c").get<double>());
    FVState s;
    s.grid = g;
    const std::string rep = j.at("representation").get<std::string>();
    if (rep == "FV")
        s.rep = Rep::FV;
    else if (rep == "usual")
        s.rep = Rep::Usual;
    else
        throw std::invalid_argument("state file: unknown representation tag");
    s.psi_plus = parse_complex_array(j.at("psi_plus"));
    s.psi_minus = parse_complex_array(j.at("psi_minus"));
    if (s.psi_plus.size() != g.n || s.psi_minus.size() != g.n)
        throw std::invalid_argument("state file: component length != grid n");
    return s;
}

void save_state(const FVState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << state_to_json(s) << "\n";
}

FVState load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return state_from_json(ss.str());
}

std::string state_hash(const FVState& s) {
    uint64_t h = 1469598103934665603ull; // FNV-1a 64
    auto feed = [&](const void* data, size_t len) {
        const unsigned char* b = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    feed(s.psi_plus.data(), s.psi_plus.size() * sizeof(cd));
    feed(s.psi_minus.data(), s.psi_minus.size() * sizeof(cd));
    feed(&s.grid.n, sizeof(int));
    feed(&s.grid.p_max, sizeof(double));
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

void save_wigner_csv(const WignerComponents& w, const std::string& path,
                     const std::string& hash) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    const PhaseSpaceGrid& g = w.grid;
    out << "# grid n=" << g.n << " p_max=" << fmt17(g.p_max)
        << " hbar=" << fmt17(g.hbar) << " mass=" << fmt17(g.mass)
        << " c=" << fmt17(g.c) << "\n";
    out << "# state_hash " << hash << "\n";
    out << "p,q,w_pp,w_mm,re_w_pm,im_w_pm\n";
    CMat wpp = wigner_field(w, 0, 0);
    CMat wmm = wigner_field(w, 1, 1);
    CMat wpm = wigner_field(w, 0, 1);
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j)
            out << fmt17(g.p(k)) << ',' << fmt17(g.q(j)) << ','
                << fmt17(wpp(k, j).real()) << ',' << fmt17(wmm(k, j).real())
                << ',' << fmt17(wpm(k, j).real()) << ','
                << fmt17(wpm(k, j).imag()) << "\n";
}

WignerComponents load_wigner_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    std::string line;
    int n = 0;
    double p_max = 0, hbar = 1, mass = 1, c = 1;
    std::vector<std::array<double, 6>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::sscanf(line.c_str(),
                        "# grid n=%d p_max=%lf hbar=%lf mass=%lf c=%lf", &n,
                        &p_max, &hbar, &mass, &c);
            continue;
        }
        if (line[0] == 'p') continue; // header
        std::array<double, 6> r{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &r[0], &r[1],
                        &r[2], &r[3], &r[4], &r[5]) == 6)
            rows.push_back(r);
    }
    if (n <= 0 || rows.size() != size_t(n) * size_t(n))
        throw std::invalid_argument("wigner csv: malformed or wrong row count");
    PhaseSpaceGrid g = make_grid(n, p_max, hbar, mass, c);
    CMat wpp(n, n), wmm(n, n), wpm(n, n), wmp(n, n);
    size_t idx = 0;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j, ++idx) {
            wpp(k, j) = rows[idx][2];
            wmm(k, j) = rows[idx][3];
            wpm(k, j) = cd(rows[idx][4], rows[idx][5]);
            wmp(k, j) = std::conj(wpm(k, j));
        }
    return components_from_fields(g, wpp, wmm, wpm, wmp);
}

} // namespace fvw
