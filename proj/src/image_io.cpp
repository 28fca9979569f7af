#include "featbench/image_io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "featbench/errors.hpp"

namespace featbench {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string token;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    while (c != EOF && !std::isspace(c)) {
        token.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c != EOF)
        in.unget(); // leave the terminator for the caller
    return token;
}

int parse_header_int(std::istream& in, const std::string& path, const char* what) {
    const std::string token = next_token(in);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw IoError(path + ": malformed " + what + " field '" + token + "'");
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        throw IoError(path + ": " + what + " value out of range: " + token);
    }
}

} // namespace

Image load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path.string() + ": cannot open file");

    const std::string magic = next_token(in);
    if (magic != "P5" && magic != "P6")
        throw IoError(path.string() + ": unsupported format '" + magic + "' (expected binary PGM P5 or PPM P6)");

    const int width = parse_header_int(in, path.string(), "width");
    const int height = parse_header_int(in, path.string(), "height");
    const int maxval = parse_header_int(in, path.string(), "maxval");
    if (width <= 0 || height <= 0)
        throw IoError(path.string() + ": invalid dimensions " + std::to_string(width) + "x" + std::to_string(height));
    if (maxval <= 0 || maxval > 255)
        throw IoError(path.string() + ": unsupported maxval " + std::to_string(maxval));
    in.get(); // single whitespace byte between header and raster

    const std::size_t n_pixels = static_cast<std::size_t>(width) * height;
    const std::size_t n_bytes = magic == "P6" ? n_pixels * 3 : n_pixels;
    std::vector<char> raw(n_bytes);
    in.read(raw.data(), static_cast<std::streamsize>(n_bytes));
    if (static_cast<std::size_t>(in.gcount()) != n_bytes)
        throw IoError(path.string() + ": truncated raster (expected " + std::to_string(n_bytes) + " bytes, got " + std::to_string(in.gcount()) + ")");

    std::vector<std::uint8_t> pixels(n_pixels);
    if (magic == "P5") {
        for (std::size_t i = 0; i < n_pixels; ++i)
            pixels[i] = static_cast<std::uint8_t>(raw[i]);
    } else {
        for (std::size_t i = 0; i < n_pixels; ++i) {
            const double r = static_cast<std::uint8_t>(raw[3 * i]);
            const double g = static_cast<std::uint8_t>(raw[3 * i + 1]);
            const double b = static_cast<std::uint8_t>(raw[3 * i + 2]);
            pixels[i] = static_cast<std::uint8_t>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
        }
    }
    return Image(width, height, std::move(pixels));
}

void save_pgm(const Image& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError(path.string() + ": cannot open file for writing");
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()), static_cast<std::streamsize>(img.pixels().size()));
    if (!out)
        throw IoError(path.string() + ": write failed");
}

} // namespace featbench
