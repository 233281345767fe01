#pragma once

namespace fracvar {

/// Gamma function on the real line.
///
/// Lanczos approximation with reflection for arguments below 1/2; relative
/// error stays below 1e-13 on [0.5, 20]. Throws GammaPoleError at zero and
/// the negative integers, InvalidArgument for non-finite input.
double gamma_function(double z);

}  // namespace fracvar
