#pragma once

namespace cmlv {

int cli_main(int argc, char** argv);

}  // namespace cmlv
