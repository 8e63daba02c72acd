#ifndef BICQ_TOOLS_CLI_HPP
#define BICQ_TOOLS_CLI_HPP

namespace bicq::cli {

// Process exit codes.
inline constexpr int success = 0;
inline constexpr int failure = 1;     ///< validation or domain error, or a failed property
inline constexpr int usage_error = 2; ///< bad flags

int run(int argc, char** argv);

} // namespace bicq::cli

#endif
