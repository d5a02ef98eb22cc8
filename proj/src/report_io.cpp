#include "whirl/report_io.hpp"

#include <sstream>

namespace whirl {

namespace {

Json board_header(const OrbitBoard& board) {
    Json j;
    j["family"] = board.family().str();
    j["order"] = board.order().str();
    Json rows = Json::array();
    for (int r = 0; r < board.rows(); ++r) rows.push_back(board.row_word(r).str());
    j["rows"] = rows;
    return j;
}

Json assignment_grid(const OrbitBoard& board, const std::vector<int>& ids) {
    Json grid = Json::array();
    for (int r = 0; r < board.rows(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= board.cols(); ++c)
            row.push_back(ids[board.cell_index(r, c)]);
        grid.push_back(row);
    }
    return grid;
}

std::string id_grid_text(const OrbitBoard& board, const std::vector<int>& ids) {
    std::ostringstream os;
    int width = 1;
    for (int id : ids) width = std::max(width, static_cast<int>(std::to_string(id).size()));
    for (int r = 0; r < board.rows(); ++r) {
        for (int c = 1; c <= board.cols(); ++c) {
            if (c > 1) os << ' ';
            int id = ids[board.cell_index(r, c)];
            std::string tag = id < 0 ? "-" : std::to_string(id);
            os << board.value(r, c) << '/' << tag << std::string(width - tag.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string verdict_line(bool homomesic, const Rational& average) {
    return homomesic ? "verdict: homomesic average=" + rational_str(average)
                     : "verdict: not-homomesic";
}

}  // namespace

Json to_json(const Rational& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Json to_json(const FamilyCensus& census) {
    Json j;
    j["family"] = census.family.str();
    j["cardinality"] = census.cardinality;
    Json words = Json::array();
    for (const auto& w : census.words) words.push_back(w.str());
    j["words"] = words;
    return j;
}

Json to_json(const OrbitBoard& board) { return board_header(board); }

Json to_json(const std::vector<Orbit>& partition) {
    Json orbits = Json::array();
    for (const Orbit& orbit : partition) {
        Json o;
        o["rep"] = orbit.representative().str();
        o["length"] = orbit.length();
        Json words = Json::array();
        for (const auto& w : orbit.words) words.push_back(w.str());
        o["words"] = words;
        orbits.push_back(o);
    }
    Json j;
    if (!partition.empty()) {
        j["family"] = partition.front().family.str();
        j["order"] = partition.front().order.str();
    }
    j["orbits"] = orbits;
    return j;
}

Json to_json(const HomomesyReport& report) {
    Json j;
    j["family"] = report.family.str();
    j["order"] = report.order.str();
    j["statistic"] = report.statistic.str();
    Json orbits = Json::array();
    for (const auto& row : report.rows) {
        Json o;
        o["rep"] = row.rep.str();
        o["length"] = row.length;
        o["values"] = row.values;
        o["average"] = to_json(row.average);
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    if (report.homomesic) {
        j["verdict"] = Json{{"status", "homomesic"}, {"average", to_json(report.average)}};
    } else {
        const auto& [x, y] = *report.witnesses;
        j["verdict"] = Json{
            {"status", "not-homomesic"},
            {"witnesses",
             Json::array({Json{{"rep", report.rows[x].rep.str()},
                               {"average", to_json(report.rows[x].average)}},
                          Json{{"rep", report.rows[y].rep.str()},
                               {"average", to_json(report.rows[y].average)}}})}};
    }
    return j;
}

Json to_json(const ChunkPartition& cert) {
    Json j;
    j["board"] = board_header(*cert.board);
    j["kind"] = "chunks";
    j["assignment"] = assignment_grid(*cert.board, cert.chunk_of);
    j["extras"] = Json{{"relabel_shift", cert.relabel_shift},
                       {"chunk_count", cert.chunks.size()}};
    return j;
}

Json to_json(const RedLightCycles& cert) {
    Json j;
    j["board"] = board_header(*cert.board);
    j["kind"] = "redlights";
    std::vector<int> ids(cert.board->cells(), -1);
    for (size_t id = 0; id < cert.cycles.size(); ++id)
        for (auto cell : cert.cycles[id]) ids[cell] = static_cast<int>(id);
    j["assignment"] = assignment_grid(*cert.board, ids);
    Json cycles = Json::array();
    for (const auto& cycle : cert.cycles) {
        Json cells = Json::array();
        for (auto cell : cycle) {
            auto [row, col] = cert.board->cell_at(cell);
            cells.push_back(Json::array({row, col}));
        }
        cycles.push_back(cells);
    }
    j["extras"] = Json{{"cycles", cycles}};
    return j;
}

Json to_json(const SnakeDecomposition& cert) {
    Json j;
    j["board"] = board_header(*cert.board);
    j["kind"] = "snakes";
    j["assignment"] = assignment_grid(*cert.board, cert.snake_of);
    Json comps = Json::array();
    for (const auto& comp : cert.compositions) comps.push_back(comp);
    j["extras"] = Json{{"compositions", comps}};
    return j;
}

Json to_json(const SweepReport& report) {
    Json j;
    j["sweep"] = report.name;
    j["seed"] = report.seed;
    j["instances"] = report.instances;
    j["orbits"] = report.orbits;
    Json cex = Json::array();
    for (const auto& c : report.counterexamples)
        cex.push_back(Json{{"family", c.family.str()},
                           {"order", c.order.str()},
                           {"rep", c.rep.str()},
                           {"detail", c.detail}});
    j["counterexamples"] = cex;
    j["instance_lines"] = report.instance_lines;
    return j;
}

Json to_json(const ToggleReport& report) {
    Json j;
    j["family"] = "subsets:n=" + std::to_string(report.n) + ",r=" + std::to_string(report.r);
    j["order"] = report.order.str();
    j["statistic"] = "card";
    Json orbits = Json::array();
    for (const auto& row : report.rows) {
        Json o;
        o["rep"] = subset_str(report.n, row.rep);
        o["rep_hex"] = subset_hex(report.n, row.rep);
        o["length"] = row.length;
        o["values"] = row.sizes;
        o["average"] = to_json(row.average);
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    j["verdict"] = report.homomesic
                       ? Json{{"status", "homomesic"}, {"average", to_json(report.average)}}
                       : Json{{"status", "not-homomesic"}};
    return j;
}

Json to_json(const TranspositionFactorization& fac) {
    Json cycles = Json::array();
    for (const auto& [a, b] : fac.cycles) cycles.push_back(Json::array({a, b}));
    return Json{{"n", fac.n}, {"cycles", cycles}, {"text", fac.str()}};
}

Json to_json(const LabeledTree& tree) {
    Json edges = Json::array();
    for (size_t i = 0; i < tree.edges.size(); ++i)
        edges.push_back(Json{{"label", i + 1},
                             {"a", tree.edges[i].first},
                             {"b", tree.edges[i].second}});
    return Json{{"points", tree.n + 1}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

std::string board_text(const OrbitBoard& board) {
    std::string out;
    for (int r = 0; r < board.rows(); ++r) {
        out += board.row_word(r).str();
        out += '\n';
    }
    return out;
}

std::string census_text(const FamilyCensus& census) {
    std::ostringstream os;
    os << "family: " << census.family.str() << '\n';
    os << "cardinality: " << census.cardinality << '\n';
    for (const auto& w : census.words) os << w.str() << '\n';
    return os.str();
}

std::string partition_text(const std::vector<Orbit>& partition, const FamilySpec& family,
                           const WhirlOrder& order) {
    std::ostringstream os;
    os << "family: " << family.str() << '\n';
    os << "order: " << order.normalized_for(family).str() << '\n';
    os << "orbits: " << partition.size() << '\n';
    for (size_t i = 0; i < partition.size(); ++i) {
        os << "orbit " << (i + 1) << ": length " << partition[i].length() << ":";
        for (const auto& w : partition[i].words) os << ' ' << w.str();
        os << '\n';
    }
    return os.str();
}

std::string homomesy_text(const HomomesyReport& report) {
    std::ostringstream os;
    os << "family: " << report.family.str() << '\n';
    os << "order: " << report.order.str() << '\n';
    os << "statistic: " << report.statistic.str() << '\n';
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        os << "orbit " << (i + 1) << ": rep=" << row.rep.str() << " length=" << row.length
           << " average=" << rational_str(row.average) << '\n';
    }
    os << verdict_line(report.homomesic, report.average) << '\n';
    if (!report.homomesic) {
        const auto& [x, y] = *report.witnesses;
        os << "witnesses: " << report.rows[x].rep.str() << " averages "
           << rational_str(report.rows[x].average) << ", " << report.rows[y].rep.str()
           << " averages " << rational_str(report.rows[y].average) << '\n';
    }
    return os.str();
}

std::string chunk_text(const ChunkPartition& cert) {
    std::ostringstream os;
    os << "family: " << cert.board->family().str() << '\n';
    os << "order: " << cert.board->order().str() << '\n';
    os << "kind: chunks\n";
    os << "relabel_shift: " << cert.relabel_shift << '\n';
    os << "chunks: " << cert.chunks.size() << '\n';
    os << id_grid_text(*cert.board, cert.chunk_of);
    return os.str();
}

std::string red_light_text(const RedLightCycles& cert) {
    std::ostringstream os;
    os << "family: " << cert.board->family().str() << '\n';
    os << "order: " << cert.board->order().str() << '\n';
    os << "kind: redlights\n";
    os << "cycles: " << cert.cycles.size() << '\n';
    std::vector<int> ids(cert.board->cells(), -1);
    for (size_t id = 0; id < cert.cycles.size(); ++id)
        for (auto cell : cert.cycles[id]) ids[cell] = static_cast<int>(id);
    os << id_grid_text(*cert.board, ids);
    return os.str();
}

std::string snake_text(const SnakeDecomposition& cert) {
    std::ostringstream os;
    os << "family: " << cert.board->family().str() << '\n';
    os << "order: " << cert.board->order().str() << '\n';
    os << "kind: snakes\n";
    os << "snakes: " << cert.snakes.size() << '\n';
    for (size_t i = 0; i < cert.compositions.size(); ++i) {
        os << "composition " << (i + 1) << ":";
        for (int c : cert.compositions[i]) os << ' ' << c;
        os << '\n';
    }
    os << id_grid_text(*cert.board, cert.snake_of);
    return os.str();
}

std::string sweep_text(const SweepReport& report) {
    std::ostringstream os;
    os << "sweep: " << report.name << '\n';
    os << "seed: " << report.seed << '\n';
    os << "instances: " << report.instances << '\n';
    os << "orbits: " << report.orbits << '\n';
    os << "counterexamples: " << report.counterexamples.size() << '\n';
    for (const auto& c : report.counterexamples)
        os << "counterexample: family=" << c.family.str() << " order=" << c.order.str()
           << " rep=" << c.rep.str() << " detail=" << c.detail << '\n';
    for (const auto& line : report.instance_lines) os << line << '\n';
    return os.str();
}

std::string toggle_text(const ToggleReport& report) {
    std::ostringstream os;
    os << "family: subsets:n=" << report.n << ",r=" << report.r << '\n';
    os << "order: " << report.order.str() << '\n';
    os << "statistic: card\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        os << "orbit " << (i + 1) << ": rep=" << subset_str(report.n, row.rep)
           << " hex=" << subset_hex(report.n, row.rep) << " length=" << row.length
           << " average=" << rational_str(row.average) << '\n';
    }
    os << verdict_line(report.homomesic, report.average) << '\n';
    return os.str();
}

std::string tree_text(const LabeledTree& tree) {
    std::ostringstream os;
    os << "points: " << (tree.n + 1) << " clockwise\n";
    for (size_t i = 0; i < tree.edges.size(); ++i)
        os << "edge " << (i + 1) << ": " << tree.edges[i].first << "-" << tree.edges[i].second
           << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string homomesy_csv(const HomomesyReport& report) {
    std::ostringstream os;
    os << "family,order,statistic,rep,length,average\n";
    for (const auto& row : report.rows)
        os << report.family.str() << ',' << report.order.str() << ','
           << report.statistic.str() << ',' << row.rep.str() << ',' << row.length << ','
           << rational_str(row.average) << '\n';
    return os.str();
}

std::string partition_csv(const std::vector<Orbit>& partition) {
    std::ostringstream os;
    os << "family,order,rep,length\n";
    for (const auto& orbit : partition)
        os << orbit.family.str() << ',' << orbit.order.str() << ','
           << orbit.representative().str() << ',' << orbit.length() << '\n';
    return os.str();
}

std::string census_csv(const FamilyCensus& census) {
    std::ostringstream os;
    os << "family,word\n";
    for (const auto& w : census.words) os << census.family.str() << ',' << w.str() << '\n';
    return os.str();
}

std::string toggle_csv(const ToggleReport& report) {
    std::ostringstream os;
    os << "n,r,order,rep,length,average\n";
    for (const auto& row : report.rows)
        os << report.n << ',' << report.r << ',' << report.order.str() << ','
           << subset_hex(report.n, row.rep) << ',' << row.length << ','
           << rational_str(row.average) << '\n';
    return os.str();
}

}  // namespace whirl
