#include "alcs/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace alcs::io {

namespace {

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' ||
                          s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::ParseError, "cannot open '" + path + "' for reading");
    return in;
}

std::ofstream create_or_fail(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::ParseError, "cannot open '" + path + "' for writing");
    return out;
}

} // namespace

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        line = rstrip(line);
        if (!line.empty()) out.push_back(line);
    }
    if (out.empty()) fail(errc::EmptySequence, "'" + path + "' holds no strings");
    return out;
}

std::vector<FastaRecord> read_fasta(const std::string& path, bool lowercase) {
    std::ifstream in = open_or_fail(path);
    std::vector<FastaRecord> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = rstrip(line);
        if (line.empty()) continue;
        if (line[0] == '>') {
            FastaRecord rec;
            rec.name = rstrip(line.substr(1));
            out.push_back(std::move(rec));
            continue;
        }
        if (out.empty())
            fail(errc::ParseError, "line " + std::to_string(lineno) +
                                       ": sequence data before the first "
                                       "record header");
        if (lowercase)
            std::transform(line.begin(), line.end(), line.begin(),
                           [](unsigned char c) {
                               return static_cast<char>(std::tolower(c));
                           });
        out.back().sequence += line;
    }
    if (out.empty())
        fail(errc::EmptySequence, "'" + path + "' holds no records");
    for (size_t r = 0; r < out.size(); ++r)
        if (out[r].sequence.empty())
            fail(errc::EmptySequence,
                 "record " + std::to_string(r + 1) + " has no sequence");
    return out;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out = create_or_fail(path);
    for (const auto& l : lines) out << l << '\n';
}

void write_fasta(const std::string& path, const std::vector<FastaRecord>& records,
                 int line_width) {
    if (line_width < 1) fail(errc::ParseError, "line width must be >= 1");
    std::ofstream out = create_or_fail(path);
    for (const auto& rec : records) {
        out << '>' << rec.name << '\n';
        for (size_t off = 0; off < rec.sequence.size();
             off += static_cast<size_t>(line_width))
            out << rec.sequence.substr(off, static_cast<size_t>(line_width))
                << '\n';
    }
}

std::vector<LetterSet> expand_iupac(const std::string& sequence) {
    std::vector<LetterSet> out;
    out.reserve(sequence.size());
    for (size_t pos = 0; pos < sequence.size(); ++pos) {
        switch (std::tolower(static_cast<unsigned char>(sequence[pos]))) {
            case 'a': out.push_back("a"); break;
            case 'c': out.push_back("c"); break;
            case 'g': out.push_back("g"); break;
            case 't': out.push_back("t"); break;
            case 'r': out.push_back("ag"); break;
            case 'y': out.push_back("ct"); break;
            case 's': out.push_back("cg"); break;
            case 'w': out.push_back("at"); break;
            case 'k': out.push_back("gt"); break;
            case 'm': out.push_back("ac"); break;
            case 'b': out.push_back("cgt"); break;
            case 'd': out.push_back("agt"); break;
            case 'h': out.push_back("act"); break;
            case 'v': out.push_back("acg"); break;
            case 'n': out.push_back("acgt"); break;
            default:
                fail(errc::UnknownIUPACCode,
                     std::string("position ") + std::to_string(pos + 1) +
                         ": '" + sequence[pos] +
                         "' is not a nucleotide code");
        }
    }
    return out;
}

DistanceMetric load_cost_table(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    DistanceMetric::WeightedBuilder builder;
    std::string line;
    long long lineno = 0;
    const auto bad = [&](const std::string& what) {
        fail(errc::ParseError,
             path + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = rstrip(line);
        if (line.empty()) continue;
        std::vector<std::string> cols;
        size_t start = 0;
        while (true) {
            const size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (cols.size() != 4)
            bad("expected op<TAB>from<TAB>to<TAB>cost, got " +
                std::to_string(cols.size()) + " fields");
        const std::string& op = cols[0];
        if (cols[1].size() != 1 || cols[2].size() != 1)
            bad("letter fields must be one character ('-' for the empty side)");
        const char from = cols[1][0], to = cols[2][0];
        long long cost = 0;
        try {
            size_t used = 0;
            cost = std::stoll(cols[3], &used);
            if (used != cols[3].size()) throw std::invalid_argument(cols[3]);
        } catch (const std::exception&) {
            bad("cost '" + cols[3] + "' is not an integer");
        }
        if (op == "sub") {
            if (from == '-' || to == '-') bad("sub takes two letters");
            builder.substitution(static_cast<unsigned char>(from),
                                 static_cast<unsigned char>(to), cost);
        } else if (op == "ins") {
            if (from != '-' || to == '-') bad("ins rows are -<TAB>letter");
            builder.insertion(static_cast<unsigned char>(to), cost);
        } else if (op == "del") {
            if (from == '-' || to != '-') bad("del rows are letter<TAB>-");
            builder.deletion(static_cast<unsigned char>(from), cost);
        } else {
            bad("unknown operation '" + op + "'");
        }
    }
    return builder.build();
}

const char* metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Hamming:      return "hamming";
        case MetricKind::Edit:         return "edit";
        case MetricKind::WeightedEdit: return "weighted";
    }
    return "unknown";
}

std::string report_json(const RunReport& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["command"] = r.command;
    j["problem"] = r.problem;
    j["metric"] = r.metric;
    j["solver"] = r.solver;
    j["k"] = r.k;
    j["t"] = r.t;
    j["m"] = r.m;
    j["threads"] = r.threads;
    j["solved"] = r.solved;
    j["wall_time_ms"] = r.wall_time_ms;
    if (!r.string_names.empty()) j["string_names"] = r.string_names;
    if (r.solved && r.solution) {
        const Solution& s = *r.solution;
        nlohmann::json res;
        res["length"] = s.length;
        res["answers"] = s.answers;
        res["source_index_1based"] = s.source_index;
        res["source_offset_1based"] = s.source_offset;
        res["support"] = s.support;
        nlohmann::json ws = nlohmann::json::array();
        for (const Witness& w : s.witnesses) {
            nlohmann::json jw;
            jw["string_index_1based"] = w.string_index;
            jw["start_1based"] = w.start;
            jw["end_1based"] = w.end;
            jw["distance"] = w.distance;
            jw["empty_occurrence"] = w.empty_occurrence;
            ws.push_back(std::move(jw));
        }
        res["witnesses"] = std::move(ws);
        j["result"] = std::move(res);
    }
    return j.dump(2) + "\n";
}

std::string report_tsv(const RunReport& r) {
    std::ostringstream out;
    out << "command\t" << r.command << '\n';
    out << "problem\t" << r.problem << '\n';
    out << "metric\t" << r.metric << '\n';
    out << "solver\t" << r.solver << '\n';
    out << "k\t" << r.k << '\n';
    out << "t\t" << r.t << '\n';
    out << "m\t" << r.m << '\n';
    out << "solved\t" << (r.solved ? 1 : 0) << '\n';
    out << "wall_time_ms\t" << r.wall_time_ms << '\n';
    if (r.solved && r.solution) {
        const Solution& s = *r.solution;
        out << "length\t" << s.length << '\n';
        for (const auto& a : s.answers) out << "answer\t" << a << '\n';
        out << "source_index_1based\t" << s.source_index << '\n';
        out << "source_offset_1based\t" << s.source_offset << '\n';
        out << "support\t" << s.support << '\n';
        for (const Witness& w : s.witnesses)
            out << "witness\t" << w.string_index << '\t' << w.start << '\t'
                << w.end << '\t' << w.distance << '\t'
                << (w.empty_occurrence ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string report_human(const RunReport& r) {
    std::ostringstream out;
    out << r.problem << " over " << r.m << " strings, metric " << r.metric
        << ", k=" << r.k << ", t=" << r.t << ", solver " << r.solver << "\n";
    if (!r.solved || !r.solution) {
        out << "no solution within the budget\n";
        return out.str();
    }
    const Solution& s = *r.solution;
    out << "length " << s.length << ", supported by " << s.support << " of "
        << r.m << " strings\n";
    if (s.answers.size() == 1) {
        out << "answer: " << s.answers[0] << " (from string " << s.source_index
            << ", offset " << s.source_offset << ")\n";
    } else {
        for (size_t i = 0; i < s.answers.size(); ++i)
            out << "answer[" << (i + 1) << "]: " << s.answers[i] << '\n';
    }
    for (const Witness& w : s.witnesses) {
        out << "  string " << w.string_index;
        if (!r.string_names.empty() &&
            w.string_index <= static_cast<int>(r.string_names.size()))
            out << " (" << r.string_names[static_cast<size_t>(w.string_index - 1)]
                << ")";
        if (w.empty_occurrence)
            out << ": empty occurrence before offset " << w.start;
        else
            out << ": occurrence at [" << w.start << ".." << w.end << "]";
        out << ", distance " << w.distance << '\n';
    }
    out << "wall time " << r.wall_time_ms << " ms\n";
    return out.str();
}

} // namespace alcs::io
