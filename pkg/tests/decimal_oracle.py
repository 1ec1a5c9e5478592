"""
60자리 decimal 기준값 계산기
- 반사계수 공명 분해 (ω_S = 1 단위)
- W 인자, 공명 U_AB/U⁰, 수직 힘 F_z/F⁰

float 구현과 독립적으로 공식을 직접 평가한다.
"""

from decimal import Decimal, getcontext

getcontext().prec = 60

ONE = Decimal(1)
TWO = Decimal(2)
THREE = Decimal(3)


def D(value) -> Decimal:
    return Decimal(repr(value)) if isinstance(value, float) else Decimal(value)


def reflection(eta, eps0, Gamma, omega):
    """(Re r, Im r) at real ω (ω_S = 1)"""
    eta, eps0, Gamma, omega = D(eta), D(eps0), D(Gamma), D(omega)
    background = (eta - ONE) / (eta + ONE)
    sigma_sq = (eps0 - ONE) / (eps0 + ONE) - background
    a = ONE - omega * omega
    b = omega * Gamma
    norm = a * a + b * b
    return background + sigma_sq * a / norm, sigma_sq * b / norm


def sigma_sq(eta, eps0):
    eta, eps0 = D(eta), D(eps0)
    return (eps0 - ONE) / (eps0 + ONE) - (eta - ONE) / (eta + ONE)


def w_factor(R_par, z_A, z_B, re_r, im_r):
    R_par, z_A, z_B = D(R_par), D(z_A), D(z_B)
    Z, Z_plus = z_A - z_B, z_A + z_B
    R_sq = R_par * R_par + Z * Z
    Rp_sq = R_par * R_par + Z_plus * Z_plus
    R, Rp = R_sq.sqrt(), Rp_sq.sqrt()
    abs_r_sq = re_r * re_r + im_r * im_r
    interference = (THREE * (R_par ** 4 - Z * Z * Z_plus * Z_plus) + R_sq * Rp_sq) / (R ** 5 * Rp ** 5)
    return THREE / R ** 6 + abs_r_sq * THREE / Rp ** 6 - re_r * interference


def atom_lineshape(omega_B, gamma_B, omega_A):
    """Re α_B(ω_A)/α_B(0)"""
    omega_B, gamma_B, omega_A = D(omega_B), D(gamma_B), D(omega_A)
    detuning = omega_B * omega_B - omega_A * omega_A
    return omega_B * omega_B * detuning / (detuning * detuning + (omega_A * gamma_B) ** 2)


def resonant_ratio(eta, eps0, Gamma, omega_B, gamma_B, omega_A, R_par, z_A, z_B, with_interface=True):
    """공명 U_AB / U⁰ = −(1/3)(Re α_B/α_B(0)) W R⁶"""
    if with_interface:
        re_r, im_r = reflection(eta, eps0, Gamma, omega_A)
    else:
        re_r, im_r = Decimal(0), Decimal(0)
    w = w_factor(R_par, z_A, z_B, re_r, im_r)
    R_sq = D(R_par) ** 2 + (D(z_A) - D(z_B)) ** 2
    return -atom_lineshape(omega_B, gamma_B, omega_A) * w * R_sq ** 3 / THREE


def lorentzian(x, y, z):
    x, y, z = D(x), D(y), D(z)
    return x ** 4 / ((x * x - y * y) ** 2 + (y * z) ** 2)


def force_z_ratio(eta, eps0, Gamma, omega_B, gamma_B, alpha0, omega_A, R_par, z_A, z_B):
    """F_z/F⁰ (ω_S = 1)"""
    s2 = sigma_sq(eta, eps0)
    omega_A, omega_B = D(omega_A), D(omega_B)
    z_A, z_B, R_par = D(z_A), D(z_B), D(R_par)
    Rp_sq = R_par * R_par + (z_A + z_B) ** 2
    surface_line = lorentzian(1, omega_A, Gamma)
    atom_line = lorentzian(omega_B, omega_A, gamma_B)
    pair = (24 * z_A ** 4 * (z_A + z_B) * D(alpha0) / Rp_sq ** 4
            * (ONE - omega_A * omega_A / (omega_B * omega_B)) * atom_line * s2)
    return -s2 * surface_line * (ONE - omega_A * omega_A + pair)
