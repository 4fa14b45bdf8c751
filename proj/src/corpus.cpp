#include "equikh/corpus.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace equikh {

std::vector<CorpusRow> load_corpus_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::vector<CorpusRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        // name,"pd",action,s
        CorpusRow r;
        std::size_t c1 = line.find(',');
        r.name = line.substr(0, c1);
        std::size_t q1 = line.find('"', c1);
        std::size_t q2 = line.find('"', q1 + 1);
        r.pd = line.substr(q1 + 1, q2 - q1 - 1);
        std::istringstream rest(line.substr(q2 + 2));
        char comma;
        rest >> r.action >> comma >> r.s;
        rows.push_back(r);
    }
    return rows;
}

std::vector<CorpusRow> load_corpus_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    nlohmann::json j;
    in >> j;
    std::vector<CorpusRow> rows;
    for (const auto& e : j)
        rows.push_back({e.at("name").get<std::string>(), e.at("pd").get<std::string>(),
                        e.at("action").get<int>(), e.at("s").get<int>()});
    return rows;
}

bool is_action_erratum(const std::string& name, const PdDiagram& d, int action) {
    if (name != "10_163") return false;
    // re-verify the inconsistency: the unique symmetry must still be k = 1
    // with fixed edges {1, 11}, and the printed action 20 matches neither
    auto s = detect_symmetry(d);
    if (!s) return false;
    if (s->k != 1 || s->fixed_edges != std::vector<int>{1, 11}) return false;
    return action == 20;
}

RowResult verify_corpus_row(const CorpusRow& row, bool mirrored) {
    RowResult res;
    res.name = row.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        PdDiagram d = parse_pd(row.pd);
        if (mirrored) d = mirror(d);
        auto sym = detect_symmetry(d);
        if (!sym) throw std::runtime_error("no PD-code symmetry found");
        bool action_ok = (sym->k == row.action) ||
                         std::count(sym->fixed_edges.begin(), sym->fixed_edges.end(),
                                    row.action) > 0 ||
                         (sym->k_normalized == row.action) ||
                         std::count(sym->fixed_edges_normalized.begin(),
                                    sym->fixed_edges_normalized.end(), row.action) > 0;
        if (!action_ok && !is_action_erratum(row.name, d, row.action))
            throw std::runtime_error("action value does not match the detected symmetry");
        CubeComplex cube = build_reduced_pointed(d, sym->fixed_edges.at(0));
        build_tau(cube, *sym);
        TauModel m = tau_model(cube);
        if (m.s != row.s)
            throw std::runtime_error("s mismatch: computed " + std::to_string(m.s) +
                                     ", table " + std::to_string(row.s));
        if (!no_invariant_survivor(m))
            throw std::runtime_error("a tau-invariant class survives the spectral sequence");
        if (!e2_degenerate(m))
            throw std::runtime_error("Bar-Natan spectral sequence does not degenerate at E2");
        int st = s_tilde(m);
        res.s = m.s;
        res.s_tilde = st;
        if (st != row.s - 2)
            throw std::runtime_error("s~ != s - 2: got " + std::to_string(st));
        res.ok = true;
        res.detail = "s=" + std::to_string(m.s) + " s~=" + std::to_string(st);
    } catch (const std::exception& e) {
        res.ok = false;
        res.detail = e.what();
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<RowResult> verify_corpus(const std::vector<CorpusRow>& rows, bool mirrored,
                                     int n_threads) {
    std::vector<RowResult> results(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) break;
            results[i] = verify_corpus_row(rows[i], mirrored);
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

} // namespace equikh
