// Display helpers for the service's exact "num/den" strings. The numeric
// conversion is used only for wedge geometry and rounding hints; every
// number shown to the player is the exact payload string.

export function fractionToNumber(text: string): number {
  const slash = text.indexOf("/");
  if (slash === -1) return Number(text);
  return Number(text.slice(0, slash)) / Number(text.slice(slash + 1));
}

export function formatExact(text: string): string {
  return text;
}

export function approx(text: string, digits = 3): string {
  const value = fractionToNumber(text);
  if (Number.isInteger(value)) return String(value);
  return value.toFixed(digits).replace(/0+$/, "").replace(/\.$/, "");
}
