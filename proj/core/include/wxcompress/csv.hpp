#ifndef WXCOMPRESS_CSV_HPP
#define WXCOMPRESS_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wxc {

// Minimal RFC-4180 reader: comma separated, double-quote quoting,
// CR/LF tolerant.  Quoted fields may contain commas and escaped quotes.
class CsvReader {
  public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Next record, or nullopt at end of input.  Blank lines are skipped.
    std::optional<std::vector<std::string>> next();

    std::size_t line_number() const { return line_; }

  private:
    std::istream& in_;
    std::size_t line_ = 0;
};

// Quotes a field only when it needs it.
std::string csv_escape(const std::string& field);

// 17-significant-digit rendering used by every file format; round-trips
// doubles exactly.
std::string fmt_double(double v);

}  // namespace wxc

#endif
