#include "udg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace udg {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Line reader that skips blank lines and '#' comments, collecting the
// comments on request.
class LineReader {
public:
    LineReader(std::istream& in, std::vector<std::string>* comments) : in_(in), comments_(comments) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') {
                if (comments_) {
                    auto body = line.substr(first + 1);
                    if (!body.empty() && body.front() == ' ') body.erase(0, 1);
                    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
                    comments_->push_back(body);
                }
                continue;
            }
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            return true;
        }
        return false;
    }

    std::vector<std::string> expect(const char* what) {
        std::vector<std::string> tokens;
        if (!next(tokens)) parse_fail(line_no_, std::string("unexpected end of input, expected ") + what);
        return tokens;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::vector<std::string>* comments_;
    std::size_t line_no_ = 0;
};

double parse_double(const std::string& tok, std::size_t line) {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        parse_fail(line, "bad coordinate '" + tok + "'");
    }
    return v;
}

template <class Int>
Int parse_int(const std::string& tok, std::size_t line) {
    Int v{};
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        parse_fail(line, "bad integer '" + tok + "'");
    }
    return v;
}

Point parse_labeled_point(LineReader& reader, const char* label) {
    const auto tok = reader.expect(label);
    if (tok.size() != 3 || tok[0] != label) {
        parse_fail(reader.line(), std::string("expected '") + label + " <x> <y>'");
    }
    return {parse_double(tok[1], reader.line()), parse_double(tok[2], reader.line())};
}

std::string format_index(index_type v) {
    return v == kNoIndex ? "-1" : std::to_string(v);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Instance to_instance(const GeneratedInstance& gen) {
    Instance inst{gen.points, gen.s, gen.t, {}};
    std::ostringstream spec;
    spec << "seed=" << gen.seed << " spec=" << to_string(gen.spec.style)
         << " width=" << format_double(gen.spec.width)
         << " height=" << format_double(gen.spec.height);
    inst.comments.push_back(spec.str());
    for (const Rect& h : gen.spec.holes) {
        inst.comments.push_back("hole " + format_double(h.min_x) + " " + format_double(h.min_y) +
                                " " + format_double(h.max_x) + " " + format_double(h.max_y));
    }
    if (gen.terminal_covered) {
        inst.comments.push_back("warning: a disk covers s or t");
    }
    return inst;
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "udg 1\n";
    for (const auto& c : inst.comments) out << "# " << c << '\n';
    out << "n " << inst.points.size() << '\n';
    out << "s " << format_double(inst.s.x) << ' ' << format_double(inst.s.y) << '\n';
    out << "t " << format_double(inst.t.x) << ' ' << format_double(inst.t.y) << '\n';
    for (const Point& p : inst.points) {
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
}

Instance read_instance(std::istream& in) {
    Instance inst;
    LineReader reader(in, &inst.comments);
    auto tok = reader.expect("header");
    if (tok.size() != 2 || tok[0] != "udg" || tok[1] != "1") {
        parse_fail(reader.line(), "expected header 'udg 1'");
    }
    tok = reader.expect("point count");
    if (tok.size() != 2 || tok[0] != "n") parse_fail(reader.line(), "expected 'n <count>'");
    const auto n = parse_int<std::size_t>(tok[1], reader.line());
    inst.s = parse_labeled_point(reader, "s");
    inst.t = parse_labeled_point(reader, "t");
    inst.points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        tok = reader.expect("point");
        if (tok.size() != 2) parse_fail(reader.line(), "expected '<x> <y>'");
        inst.points.push_back({parse_double(tok[0], reader.line()), parse_double(tok[1], reader.line())});
    }
    if (reader.next(tok)) parse_fail(reader.line(), "trailing content after the last point");
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_instance(in);
}

void save_instance(const std::string& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_instance(out, inst);
}

void write_result(std::ostream& out, const ResultFile& result) {
    out << "udg-result 1\n";
    if (result.kind == ResultFile::Kind::sssp) {
        const auto& t = result.tree;
        out << "kind sssp\n";
        out << "root " << t.root << '\n';
        out << "n " << t.dist.size() << '\n';
        for (std::size_t p = 0; p < t.dist.size(); ++p) {
            out << (t.dist[p] == kUnreached ? std::string("-1") : std::to_string(t.dist[p])) << ' '
                << format_index(t.parent[p]) << '\n';
        }
        return;
    }
    const auto& sep = result.separation;
    out << "kind separation\n";
    if (!sep.size) {
        out << "size INFEASIBLE\n";
        return;
    }
    out << "size " << *sep.size << '\n';
    if (sep.witness) {
        out << "witness " << sep.witness->root << ' ' << sep.witness->p << ' ' << sep.witness->q << '\n';
    }
    if (!result.cycle.empty()) {
        out << "cycle";
        for (const index_type v : result.cycle) out << ' ' << v;
        out << '\n';
    }
}

ResultFile read_result(std::istream& in) {
    ResultFile result;
    LineReader reader(in, nullptr);
    auto tok = reader.expect("header");
    if (tok.size() != 2 || tok[0] != "udg-result" || tok[1] != "1") {
        parse_fail(reader.line(), "expected header 'udg-result 1'");
    }
    tok = reader.expect("kind");
    if (tok.size() != 2 || tok[0] != "kind") parse_fail(reader.line(), "expected 'kind <sssp|separation>'");

    if (tok[1] == "sssp") {
        result.kind = ResultFile::Kind::sssp;
        tok = reader.expect("root");
        if (tok.size() != 2 || tok[0] != "root") parse_fail(reader.line(), "expected 'root <index>'");
        result.tree.root = parse_int<index_type>(tok[1], reader.line());
        tok = reader.expect("count");
        if (tok.size() != 2 || tok[0] != "n") parse_fail(reader.line(), "expected 'n <count>'");
        const auto n = parse_int<std::size_t>(tok[1], reader.line());
        result.tree.dist.resize(n);
        result.tree.parent.resize(n);
        for (std::size_t p = 0; p < n; ++p) {
            tok = reader.expect("dist/parent row");
            if (tok.size() != 2) parse_fail(reader.line(), "expected '<dist> <parent>'");
            result.tree.dist[p] = tok[0] == "-1" ? kUnreached : parse_int<hop_count>(tok[0], reader.line());
            result.tree.parent[p] = tok[1] == "-1" ? kNoIndex : parse_int<index_type>(tok[1], reader.line());
        }
    } else if (tok[1] == "separation") {
        result.kind = ResultFile::Kind::separation;
        tok = reader.expect("size");
        if (tok.size() != 2 || tok[0] != "size") parse_fail(reader.line(), "expected 'size <k>'");
        if (tok[1] != "INFEASIBLE") {
            result.separation.size = parse_int<std::uint32_t>(tok[1], reader.line());
        }
        while (reader.next(tok)) {
            if (tok[0] == "witness" && tok.size() == 4) {
                result.separation.witness = SeparationWitness{
                    parse_int<index_type>(tok[1], reader.line()),
                    parse_int<index_type>(tok[2], reader.line()),
                    parse_int<index_type>(tok[3], reader.line())};
            } else if (tok[0] == "cycle") {
                for (std::size_t k = 1; k < tok.size(); ++k) {
                    result.cycle.push_back(parse_int<index_type>(tok[k], reader.line()));
                }
            } else {
                parse_fail(reader.line(), "unexpected '" + tok[0] + "'");
            }
        }
        return result;
    } else {
        parse_fail(reader.line(), "unknown result kind '" + tok[1] + "'");
    }
    if (reader.next(tok)) parse_fail(reader.line(), "trailing content");
    return result;
}

const char* bench_csv_header() noexcept {
    return "algorithm,instance,n,preprocess_s,per_root_s,roots,answer_digest";
}

std::string to_csv_row(const BenchRecord& rec) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(rec.answer_digest));
    std::ostringstream row;
    row << rec.algorithm << ',' << rec.instance << ',' << rec.n << ','
        << format_double(rec.preprocess_seconds) << ',' << format_double(rec.per_root_seconds) << ','
        << rec.roots << ',' << digest;
    return row.str();
}

std::uint64_t digest_value(std::uint64_t value) noexcept { return mix_seed(value, 0xD16E57); }

std::uint64_t digest_distances(const ShortestPathResult& spr) noexcept {
    std::uint64_t sum = 0;
    for (const hop_count d : spr.dist) sum += digest_value(d);
    return sum;
}

std::uint64_t digest_separation(const SeparationAnswer& answer) noexcept {
    return digest_value(answer.size ? *answer.size : ~std::uint64_t{0});
}

}  // namespace udg
