// CSV and text output helpers. Numbers are written in shortest round-trip
// form and files are written atomically (temp + rename) so repeated runs with
// the same inputs produce byte-identical outputs.
#pragma once

#include <string>
#include <vector>

namespace seqgreedy {

std::string format_double(double x);
std::string format_int(long long x);

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void row(const std::vector<std::string>& cells);
    void write(const std::string& path) const;
    const std::string& content() const { return buf_; }

private:
    std::string buf_;
    std::size_t width_;
};

void write_text_atomic(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace seqgreedy
