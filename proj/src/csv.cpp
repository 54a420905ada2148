#include "halobeam/csv.hpp"

#include <charconv>

namespace halobeam {

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::trunc), path_(path) {
    if (!out_) {
        throw IoError("cannot open output file: " + path);
    }
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.flush();
    if (!out_) {
        throw IoError("write failed: " + path_);
    }
    out_.close();
}

}  // namespace halobeam
