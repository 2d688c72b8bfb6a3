#include "multibump/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "multibump/errors.hpp"

namespace multibump {

namespace {
constexpr uint64_t kBinaryMagic = 0x4d42464c44763131ull;  // "MBFLDv11"

void rename_into_place(const std::string& tmp, const std::string& path) {
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("could not move " + tmp + " to " + path);
}
}  // namespace

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out << content;
  }
  rename_into_place(tmp, path);
}

void write_field_csv(const std::string& path, const Field2D& f) {
  std::ostringstream out;
  out.precision(17);
  out << "# schema=" << kFieldSchema << "\n";
  out << "# x_max=" << f.grid.x_max << " z_max=" << f.grid.z_max
      << " nx=" << f.grid.nx << " nz=" << f.grid.nz << "\n";
  out << "# columns=x,z,value\n";
  for (int j = 0; j < f.grid.nz; ++j)
    for (int i = 0; i < f.grid.nx; ++i)
      out << f.grid.x(i) << ',' << f.grid.z(j) << ',' << f.at(i, j) << '\n';
  write_text_atomic(path, out.str());
}

Field2D read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::string line;
  Grid2D g;
  bool have_meta = false;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("x_max=") != std::string::npos) {
        std::sscanf(line.c_str(), "# x_max=%lf z_max=%lf nx=%d nz=%d",
                    &g.x_max, &g.z_max, &g.nx, &g.nz);
        have_meta = true;
      }
      continue;
    }
    const auto last = line.rfind(',');
    if (last == std::string::npos) throw Error("malformed field CSV row");
    values.push_back(std::stod(line.substr(last + 1)));
  }
  if (!have_meta) throw Error("field CSV missing grid metadata");
  Field2D f;
  f.grid = g;
  f.v = std::move(values);
  if (static_cast<long>(f.v.size()) != g.size())
    throw Error("field CSV: value count does not match grid");
  return f;
}

void write_field_binary(const std::string& path, const Field2D& f) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    auto put = [&out](const void* p, size_t n) {
      out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    };
    put(&kBinaryMagic, sizeof kBinaryMagic);
    put(&f.grid.x_max, sizeof(double));
    put(&f.grid.z_max, sizeof(double));
    const int64_t nx = f.grid.nx, nz = f.grid.nz;
    put(&nx, sizeof nx);
    put(&nz, sizeof nz);
    put(f.v.data(), f.v.size() * sizeof(double));
  }
  rename_into_place(tmp, path);
}

Field2D read_field_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  auto get = [&in, &path](void* p, size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (!in) throw Error("truncated binary field file " + path);
  };
  uint64_t magic = 0;
  get(&magic, sizeof magic);
  if (magic != kBinaryMagic) throw Error(path + ": not a multibump field dump");
  Field2D f;
  get(&f.grid.x_max, sizeof(double));
  get(&f.grid.z_max, sizeof(double));
  int64_t nx = 0, nz = 0;
  get(&nx, sizeof nx);
  get(&nz, sizeof nz);
  f.grid.nx = static_cast<int>(nx);
  f.grid.nz = static_cast<int>(nz);
  f.v.resize(f.grid.size());
  get(f.v.data(), f.v.size() * sizeof(double));
  return f;
}

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "# schema=multibump-table-v1\n# columns=";
  for (size_t c = 0; c < columns.size(); ++c)
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c)
      out << r[c] << (c + 1 < r.size() ? "," : "\n");
  }
  write_text_atomic(path, out.str());
}

}  // namespace multibump
