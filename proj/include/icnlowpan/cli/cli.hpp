#ifndef ICNLOWPAN_CLI_CLI_HPP
#define ICNLOWPAN_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace icnlowpan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr uint64_t kDefaultSeed = 20190922;

/** \brief Runs one command line.
 *
 *  \p args excludes the program name. Hex-consuming commands read from
 *  \p in unless --in is given.
 *  \return kExitOk, kExitRuntime or kExitUsage
 */
int
runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace icnlowpan::cli

#endif // ICNLOWPAN_CLI_CLI_HPP
