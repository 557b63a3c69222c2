#include "bda/raster.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "bda/error.hpp"
#include "bda/textfmt.hpp"

namespace bda::raster {

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool iequals(std::string_view a, std::string_view b) noexcept {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

std::string at_line(int line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

// Cursor over the grid text that tracks the current line number.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool next_token(std::string_view& tok) {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
        if (pos_ >= text_.size()) return false;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
        tok = text_.substr(start, pos_ - start);
        return true;
    }

    // Peeks the next token without consuming it.
    bool peek_token(std::string_view& tok) {
        const auto saved_pos = pos_;
        const auto saved_line = line_;
        const bool ok = next_token(tok);
        pos_ = saved_pos;
        line_ = saved_line;
        return ok;
    }

    int line() const noexcept { return line_; }

private:
    std::string_view text_;
    std::size_t pos_{0};
    int line_{1};
};

template <typename T>
bool parse_number(std::string_view tok, T& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

template <typename T>
T read_header_value(Scanner& sc, std::string_view key) {
    std::string_view name;
    if (!sc.next_token(name) || !iequals(name, key)) {
        throw Error(Errc::MissingHeaderKey,
                    at_line(sc.line(), "expected header key '" + std::string(key) + "'"));
    }
    std::string_view value;
    T out{};
    if (!sc.next_token(value) || !parse_number(value, out)) {
        throw Error(Errc::InvalidHeaderValue,
                    at_line(sc.line(), "bad value for '" + std::string(key) + "'"));
    }
    return out;
}

}  // namespace

bool is_class_code(std::int32_t code) noexcept { return code >= 0 && code <= 2; }

ClassRaster::ClassRaster(int ncols, int nrows, double xll, double yll, double cellsize,
                         std::int32_t nodata, std::vector<std::int32_t> cells)
    : ncols_(ncols), nrows_(nrows), xll_(xll), yll_(yll), cellsize_(cellsize), nodata_(nodata),
      cells_(std::move(cells)) {
    if (ncols_ <= 0 || nrows_ <= 0) {
        throw Error(Errc::InvalidHeaderValue, "raster dimensions must be positive");
    }
    if (!(cellsize_ > 0.0) || !std::isfinite(cellsize_) || !std::isfinite(xll_) ||
        !std::isfinite(yll_)) {
        throw Error(Errc::InvalidHeaderValue, "raster cellsize must be positive and finite");
    }
    if (cells_.size() != static_cast<std::size_t>(ncols_) * static_cast<std::size_t>(nrows_)) {
        throw Error(Errc::CellCountMismatch, "expected " + std::to_string(ncols_ * nrows_) +
                                                 " cells, got " + std::to_string(cells_.size()));
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != nodata_ && !is_class_code(cells_[i])) {
            throw Error(Errc::InvalidClassCode,
                        "invalid class code " + std::to_string(cells_[i]) + " at cell " +
                            std::to_string(i));
        }
    }
}

std::int32_t ClassRaster::at(int col, int row) const {
    if (col < 0 || col >= ncols_ || row < 0 || row >= nrows_) {
        throw Error(Errc::IndexOutOfRange, "pixel (" + std::to_string(col) + ", " +
                                               std::to_string(row) + ") outside raster");
    }
    return at_unchecked(col, row);
}

geom::BBox ClassRaster::bounds() const noexcept {
    return {xll_, yll_, xll_ + ncols_ * cellsize_, yll_ + nrows_ * cellsize_};
}

geom::GeoPoint pixel_center(const ClassRaster& r, int col, int row) {
    if (col < 0 || col >= r.ncols() || row < 0 || row >= r.nrows()) {
        throw Error(Errc::IndexOutOfRange, "pixel (" + std::to_string(col) + ", " +
                                               std::to_string(row) + ") outside raster");
    }
    return pixel_center_unchecked(r, col, row);
}

ClassRaster parse_ascii_grid(std::string_view text) {
    Scanner sc(text);
    const int ncols = read_header_value<int>(sc, "ncols");
    const int nrows = read_header_value<int>(sc, "nrows");
    const double xll = read_header_value<double>(sc, "xllcorner");
    const double yll = read_header_value<double>(sc, "yllcorner");
    const double cellsize = read_header_value<double>(sc, "cellsize");
    std::int32_t nodata = kDefaultNodata;
    std::string_view tok;
    if (sc.peek_token(tok) && iequals(tok, "nodata_value")) {
        nodata = read_header_value<std::int32_t>(sc, "nodata_value");
    }
    if (ncols <= 0 || nrows <= 0) {
        throw Error(Errc::InvalidHeaderValue, at_line(sc.line(), "ncols and nrows must be positive"));
    }
    if (!(cellsize > 0.0)) {
        throw Error(Errc::InvalidHeaderValue, at_line(sc.line(), "cellsize must be positive"));
    }

    const std::size_t expected = static_cast<std::size_t>(ncols) * static_cast<std::size_t>(nrows);
    std::vector<std::int32_t> cells;
    cells.reserve(expected);
    while (sc.next_token(tok)) {
        std::int32_t v = 0;
        if (!parse_number(tok, v)) {
            throw Error(Errc::NonIntegerCell,
                        at_line(sc.line(), "non-integer cell '" + std::string(tok) + "'"));
        }
        if (v != nodata && !is_class_code(v)) {
            throw Error(Errc::InvalidClassCode,
                        at_line(sc.line(), "invalid class code " + std::to_string(v)));
        }
        if (cells.size() == expected) {
            throw Error(Errc::CellCountMismatch,
                        at_line(sc.line(), "more than " + std::to_string(expected) + " cells"));
        }
        cells.push_back(v);
    }
    if (cells.size() != expected) {
        throw Error(Errc::CellCountMismatch,
                    at_line(sc.line(), "expected " + std::to_string(expected) + " cells, got " +
                                           std::to_string(cells.size())));
    }
    return ClassRaster(ncols, nrows, xll, yll, cellsize, nodata, std::move(cells));
}

std::string write_ascii_grid(const ClassRaster& r) {
    std::string out;
    out.reserve(static_cast<std::size_t>(r.ncols()) * static_cast<std::size_t>(r.nrows()) * 2 + 128);
    out += "ncols " + std::to_string(r.ncols()) + "\n";
    out += "nrows " + std::to_string(r.nrows()) + "\n";
    out += "xllcorner " + text::format_double(r.xll()) + "\n";
    out += "yllcorner " + text::format_double(r.yll()) + "\n";
    out += "cellsize " + text::format_double(r.cellsize()) + "\n";
    out += "nodata_value " + std::to_string(r.nodata()) + "\n";
    std::array<char, 16> buf{};
    for (int row = 0; row < r.nrows(); ++row) {
        for (int col = 0; col < r.ncols(); ++col) {
            if (col > 0) out += ' ';
            const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), r.at_unchecked(col, row));
            out.append(buf.data(), res.ptr);
        }
        out += '\n';
    }
    return out;
}

}  // namespace bda::raster
