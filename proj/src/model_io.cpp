#include "gaids/model_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace gaids {

namespace {

Error format_error(std::size_t line_no, const std::string& what) {
    return Error(ErrorKind::ModelFormat, "model line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

void write_vector(std::ostream& out, const FeatureVector& v) {
    for (int i = 0; i < kFeatureCount; ++i) out << ',' << format_real(v[i]);
}

FeatureVector read_vector(std::span<const std::string_view> fields, std::size_t line_no) {
    if (fields.size() != static_cast<std::size_t>(kFeatureCount)) {
        throw format_error(line_no, "expected " + std::to_string(kFeatureCount) + " values");
    }
    FeatureVector v;
    for (int i = 0; i < kFeatureCount; ++i) {
        if (!parse_number(fields[i], v[i])) throw format_error(line_no, "bad real '" + std::string(fields[i]) + "'");
    }
    return v;
}

}  // namespace

std::string format_real(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

void write_model(std::ostream& out, const ChromosomeModel& model) {
    out << kModelFormatTag << ' ' << kModelFormatVersion << ' ' << format_real(model.range_used) << ' '
        << model.training_size << ' ' << kFeatureCount << '\n';
    for (const auto& group : model.groups) {
        for (const auto& c : group.chromosomes) {
            out << group.label << ',' << to_string(group.category) << ',' << c.member_count << ','
                << format_real(c.spread);
            write_vector(out, c.centroid);
            out << '\n';
        }
    }
    out << "norm_min";
    write_vector(out, model.normalization.min);
    out << "\nnorm_max";
    write_vector(out, model.normalization.max);
    out << '\n';
}

ChromosomeModel read_model(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::ModelFormat, "empty model file");

    ChromosomeModel model;
    {
        std::istringstream header(line);
        std::string tag;
        int version = 0;
        std::string range_text;
        int features = 0;
        header >> tag >> version;
        if (tag != kModelFormatTag) throw Error(ErrorKind::ModelFormat, "not a model file (tag '" + tag + "')");
        if (version != kModelFormatVersion) {
            throw Error(ErrorKind::ModelVersionMismatch, "unsupported model version " + std::to_string(version));
        }
        header >> range_text >> model.training_size >> features;
        if (!header || !parse_number(std::string_view(range_text), model.range_used)) {
            throw format_error(1, "malformed header");
        }
        if (features != kFeatureCount) {
            throw Error(ErrorKind::ModelFormat, "model has " + std::to_string(features) + " features");
        }
    }

    std::unordered_map<std::string, std::size_t> group_index;
    bool have_min = false;
    bool have_max = false;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        const std::span<const std::string_view> all(fields);
        if (fields.front() == "norm_min" || fields.front() == "norm_max") {
            const FeatureVector v = read_vector(all.subspan(1), line_no);
            if (fields.front() == "norm_min") {
                model.normalization.min = v;
                have_min = true;
            } else {
                model.normalization.max = v;
                have_max = true;
            }
            continue;
        }
        if (fields.size() != static_cast<std::size_t>(kFeatureCount) + 4) throw format_error(line_no, "bad field count");

        Chromosome c;
        c.group_label = std::string(fields[0]);
        const auto category = parse_category(fields[1]);
        if (!category) throw format_error(line_no, "unknown category '" + std::string(fields[1]) + "'");
        if (!parse_number(fields[2], c.member_count) || c.member_count == 0) {
            throw format_error(line_no, "bad member count");
        }
        if (!parse_number(fields[3], c.spread) || c.spread < 0.0) throw format_error(line_no, "bad spread");
        c.centroid = read_vector(all.subspan(4), line_no);

        auto [it, inserted] = group_index.try_emplace(c.group_label, model.groups.size());
        if (inserted) model.groups.push_back({c.group_label, *category, {}});
        if (model.groups[it->second].category != *category) {
            throw format_error(line_no, "inconsistent category for group '" + c.group_label + "'");
        }
        model.groups[it->second].chromosomes.push_back(std::move(c));
    }
    if (!have_min || !have_max) throw Error(ErrorKind::ModelFormat, "model is missing normalization statistics");
    return model;
}

void save_model(const std::string& path, const ChromosomeModel& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    write_model(out, model);
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

ChromosomeModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open model '" + path + "'");
    return read_model(in);
}

}  // namespace gaids
