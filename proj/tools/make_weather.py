#!/usr/bin/env python3
"""Writes the shipped one-week hourly weather file (data/weather_week.csv).

Synthetic but plausible late-October conditions for a humid tropical coastal
site: diurnal temperature swing peaking mid-afternoon, humidity moving
inversely with temperature, clear-sky irradiance scaled by a per-day
cloudiness factor. Deterministic; no random numbers.
"""
import math
import sys
from datetime import datetime, timedelta

START = datetime(1996, 10, 20, 0, 0, 0)
DAYS = 7
MEAN_T = [24.8, 25.2, 25.6, 24.9, 25.3, 25.9, 25.5]
SWING = [5.0, 5.4, 5.8, 4.2, 5.2, 6.0, 5.6]
CLOUD = [0.92, 0.85, 1.00, 0.65, 0.88, 0.95, 0.90]
G_PEAK = 980.0
SUNRISE, SUNSET = 5.8, 18.4


def row(k):
    ts = START + timedelta(hours=k)
    day, hour = divmod(k, 24)
    phase = 2.0 * math.pi * (hour - 14.0) / 24.0
    t = MEAN_T[day] + 0.5 * SWING[day] * math.cos(phase)
    rh = min(0.95, max(0.35, 0.72 - 0.11 * math.cos(phase) + 0.04 * (1.0 - CLOUD[day])))
    if SUNRISE < hour < SUNSET:
        s = math.sin(math.pi * (hour - SUNRISE) / (SUNSET - SUNRISE))
        g = G_PEAK * CLOUD[day] * s ** 1.3
    else:
        g = 0.0
    wind = 2.5 + 1.5 * max(0.0, math.sin(math.pi * (hour - 8.0) / 12.0))
    return f"{ts:%Y-%m-%dT%H:%M:%S},{t:.2f},{rh:.3f},{g:.1f},{wind:.2f}"


def main(path):
    with open(path, "w") as f:
        f.write("timestamp,t_ae_C,rh,g_horiz_W_m2,wind_speed_m_s\n")
        for k in range(DAYS * 24):
            f.write(row(k) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/weather_week.csv")
