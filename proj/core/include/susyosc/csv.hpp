#ifndef SUSYOSC_CSV_HPP
#define SUSYOSC_CSV_HPP

#include <string>
#include <vector>

namespace susyosc::csv {

// 17 significant digits: the shortest round-trippable form for double.
std::string format_double(double v);

class Writer {
  public:
    explicit Writer(std::vector<std::string> header);
    void row(const std::vector<double>& values);
    const std::string& str() const { return out_; }

  private:
    std::string out_;
    size_t columns_;
};

} // namespace susyosc::csv

#endif
