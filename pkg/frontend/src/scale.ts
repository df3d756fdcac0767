/** The 17 admissible judgment values, ascending. */
export interface ScaleOption {
  /** Numeric value sent to the service. */
  readonly value: number;
  /** Human-readable fraction label. */
  readonly label: string;
}

export const SCALE: readonly ScaleOption[] = [
  ...Array.from({ length: 8 }, (_, k) => {
    const d = 9 - k; // 9 down to 2
    return { value: 1 / d, label: `1/${d}` };
  }),
  { value: 1, label: "1" },
  ...Array.from({ length: 8 }, (_, k) => ({
    value: k + 2,
    label: String(k + 2),
  })),
];

/** Label for an arbitrary value; reciprocals of scale values are also
 * rendered as fractions so mirrored cells read naturally. */
export function formatValue(value: number): string {
  for (const opt of SCALE) {
    if (Math.abs(value - opt.value) <= 1e-9 * opt.value) return opt.label;
  }
  return value.toPrecision(6);
}

export function isScaleValue(value: number): boolean {
  return SCALE.some((opt) => Math.abs(value - opt.value) <= 1e-9 * opt.value);
}
